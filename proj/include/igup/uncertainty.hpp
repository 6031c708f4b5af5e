#ifndef IGUP_UNCERTAINTY_HPP
#define IGUP_UNCERTAINTY_HPP

#include <map>
#include <string>
#include <vector>

#include "igup/model.hpp"
#include "igup/series.hpp"

namespace igup {

struct UncertaintyResult {
  double delta_x_min = 0;     // in units of hbar * [alpha]
  double delta_p_at_min = 0;  // dp (moment closure) or the squeeze lambda's dp
  std::string method;
  bool bounded_below = true;  // false when dx decreases without an interior minimum
  double error_estimate = 0;
  std::string diagnostics;
};

// Float coefficients of |p|^k, k = 0..order, for a bound series.
std::vector<double> series_moment_coeffs(const MomentumSeries& F,
                                         const std::map<std::string, double>& values);

// Minimize L(dp) = (hbar/2) <F> / dp with Gaussian moment closure
// <|p|^k> = dp^k 2^(k/2) Gamma((k+1)/2) / sqrt(pi), <p> = 0.
// coeffs[k] multiplies |p|^k. scale_hint centers the bracketing grid at
// dp = 1/sqrt(scale_hint) (the leading deformation parameter).
UncertaintyResult moment_closure_min(const std::vector<double>& coeffs, double scale_hint,
                                     double hbar = 1.0);

// Scan squeeze parameter lambda over saturation states
// psi(p) ~ exp(-(lambda/hbar) G(p)), G' = p/F, under the measure dp/F,
// computing dx = (hbar/2) <F> / dp per lambda. Grid centered at
// lambda = hbar * scale_hint.
UncertaintyResult saturation_scan_min(const GeneratorEvaluator& gen, double scale_hint,
                                      double hbar = 1.0, double tol = 1e-10);

// Kempf's isotropic 3D bound: moment closure of 1 + (3 beta + betap) p^2,
// minimized in closed form to hbar * sqrt(3 beta + betap).
UncertaintyResult kempf_isotropic_min(double beta, double betap, double hbar = 1.0);

}  // namespace igup

#endif
