#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "igup/model.hpp"
#include "igup/uncertainty.hpp"

using namespace igup;

namespace {

GeneratorEvaluator kmm_gen(double beta) {
  return *closed_generator("KMM1D", {{"beta", beta}});
}

}  // namespace

TEST_CASE("moment closure: KMM dx_min = hbar sqrt(beta)") {
  for (double beta : {0.25, 1.0, 4.0}) {
    UncertaintyResult r = moment_closure_min({1.0, 0.0, beta}, beta);
    CAPTURE(beta);
    CHECK(r.bounded_below);
    CHECK(r.delta_x_min == doctest::Approx(std::sqrt(beta)).epsilon(1e-6));
    CHECK(r.delta_p_at_min == doctest::Approx(1 / std::sqrt(beta)).epsilon(1e-6));
  }
}

TEST_CASE("moment closure: canonical generator has no interior minimum") {
  UncertaintyResult r = moment_closure_min({1.0}, 1.0);
  CHECK_FALSE(r.bounded_below);
  CHECK(r.delta_x_min == 0.0);
}

TEST_CASE("Kempf isotropic 3D bound: hbar sqrt(3 beta + betap)") {
  UncertaintyResult r = kempf_isotropic_min(1.0, 1.0);
  CHECK(r.delta_x_min == doctest::Approx(2.0).epsilon(1e-9));
  for (double beta : {0.3, 2.0})
    for (double betap : {0.1, 1.5}) {
      UncertaintyResult s = kempf_isotropic_min(beta, betap);
      CHECK(s.delta_x_min == doctest::Approx(std::sqrt(3 * beta + betap)).epsilon(1e-9));
      // Agrees with the generic scanner on the same moment function.
      UncertaintyResult scanned = moment_closure_min({1.0, 0.0, 3 * beta + betap}, beta);
      CHECK(scanned.delta_x_min == doctest::Approx(s.delta_x_min).epsilon(1e-9));
    }
}

TEST_CASE("saturation scan: KMM matches hbar sqrt(beta) to 1e-6") {
  for (double beta : {0.25, 1.0, 4.0}) {
    UncertaintyResult r = saturation_scan_min(kmm_gen(beta), beta);
    CAPTURE(beta);
    CHECK(r.bounded_below);
    CHECK(r.delta_x_min == doctest::Approx(std::sqrt(beta)).epsilon(1e-6));
  }
}

TEST_CASE("both methods agree for KMM to 1e-6 relative") {
  for (double beta : {0.25, 1.0, 4.0}) {
    UncertaintyResult mc = moment_closure_min({1.0, 0.0, beta}, beta);
    UncertaintyResult sc = saturation_scan_min(kmm_gen(beta), beta);
    CHECK(mc.delta_x_min == doctest::Approx(sc.delta_x_min).epsilon(1e-6));
  }
}

TEST_CASE("scaling covariance: beta -> s beta rescales dx by sqrt(s)") {
  const double base_mc = moment_closure_min({1.0, 0.0, 1.0}, 1.0).delta_x_min;
  const double base_sc = saturation_scan_min(kmm_gen(1.0), 1.0).delta_x_min;
  for (double s : {0.25, 1.0, 4.0}) {
    UncertaintyResult mc = moment_closure_min({1.0, 0.0, s}, s);
    CHECK(mc.delta_x_min == doctest::Approx(std::sqrt(s) * base_mc).epsilon(1e-6));
    CHECK(mc.delta_p_at_min * std::sqrt(s) == doctest::Approx(1.0).epsilon(1e-6));
    UncertaintyResult sc = saturation_scan_min(kmm_gen(s), s);
    CHECK(sc.delta_x_min == doctest::Approx(std::sqrt(s) * base_sc).epsilon(1e-6));
  }
}

TEST_CASE("monotonicity: adding a positive p^2 coefficient never lowers dx_min") {
  double prev = 0;
  for (double c : {0.5, 1.0, 2.0, 5.0}) {
    double dx = moment_closure_min({1.0, 0.0, c}, c).delta_x_min;
    CHECK(dx >= prev);
    prev = dx;
  }
  // Same under the saturation scan on F = 1 + c p^2.
  prev = 0;
  for (double c : {0.5, 1.0, 2.0}) {
    double dx = saturation_scan_min(kmm_gen(c), c).delta_x_min;
    CHECK(dx >= prev);
    prev = dx;
  }
}

TEST_CASE("quadrature self-check: tighter tolerance moves the result less than its error") {
  UncertaintyResult loose = saturation_scan_min(kmm_gen(1.0), 1.0, 1.0, 1e-8);
  UncertaintyResult tight = saturation_scan_min(kmm_gen(1.0), 1.0, 1.0, 5e-9);
  CHECK(std::abs(loose.delta_x_min - tight.delta_x_min) <=
        std::max(loose.error_estimate, 1e-9));
}

TEST_CASE("Petruzziello: dx decreases monotonically, no positive lower bound") {
  auto gen = *closed_generator("Petruzziello", {{"beta", 0.01}});
  UncertaintyResult r = saturation_scan_min(gen, 0.01);
  CHECK_FALSE(r.bounded_below);
  CHECK(r.delta_x_min == 0.0);
}

TEST_CASE("bounded-domain generators: Pedram scan stays finite") {
  auto gen = *closed_generator("Pedram", {{"beta", 1.0}});
  UncertaintyResult r = saturation_scan_min(gen, 1.0);
  CHECK(r.bounded_below);
  CHECK(std::isfinite(r.delta_x_min));
  CHECK(r.delta_x_min > 0);
}

TEST_CASE("Kempf-Mangano 1D reduction vs the published 2.29 hbar sqrt(beta) (informational)") {
  const double beta = 1.0;
  auto gen = *closed_generator("KempfMangano", {{"beta", beta}});
  UncertaintyResult r = saturation_scan_min(gen, beta);
  double claim = instantiate("KempfMangano", 2).claim->evaluate({{"beta", beta}}, 1.0);
  double rel = std::abs(r.delta_x_min - claim) / claim;
  // Non-gating comparison: the published value comes from the exact 3D
  // treatment, not from this 1D scan. Report only.
  MESSAGE("KempfMangano 1D scan dx_min = ", r.delta_x_min, ", published ", claim,
          ", relative difference ", rel);
  CHECK(r.delta_x_min > 0);
  WARN(rel < 0.15);
}
