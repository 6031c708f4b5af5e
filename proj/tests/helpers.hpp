// Shared test utilities: deterministic random series generators.
#ifndef IGUP_TESTS_HELPERS_HPP
#define IGUP_TESTS_HELPERS_HPP

#include <random>

#include "igup/commutator.hpp"
#include "igup/series.hpp"

namespace igup::testing {

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  return Rational(num(rng), den(rng));
}

// Ungraded random series (numeric coefficients, no symbols).
inline MomentumSeries random_numeric_series(std::mt19937& rng, const SymbolTablePtr& table,
                                            int order, bool unit_constant) {
  MomentumSeries s = MomentumSeries::one(table, order);
  if (!unit_constant) s.set_coeff(0, PolyCoeff::constant(random_rational(rng)));
  for (int k = 1; k <= order; ++k) s.set_coeff(k, PolyCoeff::constant(random_rational(rng)));
  return s;
}

// Table with two graded symbols: u (weight 1) and v (weight 2).
inline SymbolTablePtr graded_table() {
  static SymbolTablePtr t = make_table({{"u", 1}, {"v", 2}});
  return t;
}

// Random homogeneous polynomial of total weight w in u, v.
inline PolyCoeff random_weighted_poly(std::mt19937& rng, int w) {
  PolyCoeff p;
  std::uniform_int_distribution<int> keep(0, 2);
  for (int b = 0; 2 * b <= w; ++b) {
    int a = w - 2 * b;
    if (keep(rng) == 0) continue;  // sparse
    Monomial m;
    if (a > 0) m[0] = static_cast<unsigned>(a);
    if (b > 0) m[1] = static_cast<unsigned>(b);
    p.add_term(m, random_rational(rng));
  }
  return p;
}

// Random graded series: coefficient of p^k homogeneous of weight k.
inline MomentumSeries random_graded_series(std::mt19937& rng, int order,
                                           bool unit_constant = true) {
  MomentumSeries s = MomentumSeries::one(graded_table(), order);
  if (!unit_constant) s.set_coeff(0, PolyCoeff::constant(random_rational(rng)));
  for (int k = 1; k <= order; ++k) s.set_coeff(k, random_weighted_poly(rng, k));
  return s;
}

// Random graded alpha-sequence (entry n has weight n), indices 1..order.
inline CoeffSeq random_graded_alphas(std::mt19937& rng, int order) {
  CoeffSeq alphas{1, {}};
  for (int n = 1; n <= order; ++n) alphas.entries.push_back(random_weighted_poly(rng, n));
  return alphas;
}

// Asserts the grading invariant on every coefficient.
inline bool grading_holds(const MomentumSeries& s) {
  for (int k = s.min_power(); k <= s.order(); ++k)
    if (!s.coeff(k).is_homogeneous_of_weight(k, *s.table())) return false;
  return true;
}

}  // namespace igup::testing

#endif
