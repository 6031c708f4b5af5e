#ifndef IGUP_SERIES_HPP
#define IGUP_SERIES_HPP

#include <vector>

#include "igup/poly.hpp"
#include "igup/symbol.hpp"

namespace igup {

// Truncated power series in the momentum magnitude p. Coefficients are
// exact rational polynomials in the declared model parameters.
//
// Powers run from min_power (0, or -1 for g-type series) to order,
// inclusive. The truncation order is explicit data: binary operations
// truncate to the minimum common order.
class MomentumSeries {
 public:
  MomentumSeries(SymbolTablePtr table, int min_power, int order,
                 std::vector<PolyCoeff> coeffs);

  // The constant series c (min_power 0, given order).
  static MomentumSeries constant(SymbolTablePtr table, Rational c, int order);
  static MomentumSeries one(SymbolTablePtr table, int order) {
    return constant(std::move(table), 1, order);
  }

  const SymbolTablePtr& table() const { return table_; }
  int min_power() const { return min_power_; }
  int order() const { return order_; }
  bool graded() const { return graded_; }

  // Coefficient of p^k; zero outside the stored range (powers above the
  // truncation order are unknown, asking for them is an error).
  const PolyCoeff& coeff(int power) const;
  void set_coeff(int power, PolyCoeff c);

  bool is_zero() const;

  MomentumSeries truncated(int new_order) const;

  friend MomentumSeries operator+(const MomentumSeries& a, const MomentumSeries& b);
  friend MomentumSeries operator-(const MomentumSeries& a, const MomentumSeries& b);
  friend bool operator==(const MomentumSeries& a, const MomentumSeries& b);

 private:
  SymbolTablePtr table_;
  int min_power_ = 0;
  int order_ = 0;
  std::vector<PolyCoeff> coeffs_;  // coeffs_[i] multiplies p^(min_power_+i)
  bool graded_ = false;

  void recompute_graded();
};

// Cauchy product truncated to the minimum common order.
MomentumSeries mul(const MomentumSeries& a, const MomentumSeries& b);

// a^n via the power-series recurrence
//   c_m^(n) = (1/m) sum_{s=1}^m (s n - m + s) A_s c_{m-s}^(n),  c_0^(n) = 1.
// Requires constant term 1 and min_power 0.
MomentumSeries pow_series(const MomentumSeries& a, int n);

// Multiplicative inverse; requires an invertible rational constant term.
MomentumSeries reciprocal(const MomentumSeries& a);

// Term-by-term antiderivative with zero constant of integration.
// Requires no p^-1 term.
MomentumSeries antiderivative(const MomentumSeries& a);

// Shift every power by delta (multiply by p^delta). The result must not
// dip below p^-1.
MomentumSeries shift(const MomentumSeries& a, int delta);

// Multiply every coefficient by a polynomial; order is preserved.
MomentumSeries scale(const MomentumSeries& a, const PolyCoeff& c);

// Series reversion. h is a multiplier series with unit constant term,
// defining p = h(rho)*rho; returns the A-series with rho = p * sum A_r p^r.
// Coefficients via the Lagrange-inversion recurrence
//   A_r = sum_s C(r+s+1, s) (-1)^s/(r+s+1) q_{r,s},
//   q_{r,s} = sum_i alpha_i q_{r-i,s-1},  q_{0,0}=1, q_{r,0}=0 (r>=1).
MomentumSeries revert(const MomentumSeries& h);

// Substitute v -> v * inner(v) into outer(v). inner is a multiplier
// series with unit constant term.
MomentumSeries compose(const MomentumSeries& outer, const MomentumSeries& inner);

// Canonical text form: "sum of <rational>*<monomial>*p^<k>" in ascending
// power; e.g. "1 + 1/3*beta^1*p^2".
std::string to_string(const MomentumSeries& s);
MomentumSeries parse_series(const std::string& text, SymbolTablePtr table, int order);

// Structured machine form (array of {power, terms}).
std::string to_json(const MomentumSeries& s);

}  // namespace igup

#endif
