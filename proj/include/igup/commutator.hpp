#ifndef IGUP_COMMUTATOR_HPP
#define IGUP_COMMUTATOR_HPP

#include <optional>
#include <vector>

#include "igup/series.hpp"

namespace igup {

// A finite coefficient sequence indexed from `first`; entries outside the
// listed range are identically zero (model data, not a truncated series).
struct CoeffSeq {
  int first = 1;
  std::vector<PolyCoeff> entries;

  static const PolyCoeff& zero() {
    static const PolyCoeff z{};
    return z;
  }
  const PolyCoeff& at(int i) const {
    if (i < first || i >= first + static_cast<int>(entries.size())) return zero();
    return entries[static_cast<std::size_t>(i - first)];
  }
  int last() const { return first + static_cast<int>(entries.size()) - 1; }
};

// [x_i,p_j] = i hbar [ D(p) delta_ij + T(p) p_i p_j / p^2 ],
// with D(0) = 1. The coefficient of p^P in T is b_{P-2}.
struct XPCommutator {
  MomentumSeries delta_part;   // D(p)
  MomentumSeries tensor_part;  // T(p)
};

// [x_i,x_j] = i hbar C(p) sum_k eps_ijk L_k; C == 0 iff commutative.
struct XXCommutator {
  MomentumSeries coeff;  // C(p), min_power -1 permitted
};

// c_{P-n}^(n) as a polynomial in alpha_1..alpha_{P-n}: coefficient of
// p^{P-n} in the n-th power of the reversion A-series.
PolyCoeff table_coefficient(int P, int n, const CoeffSeq& alphas, const SymbolTablePtr& table);

// Same, over generic symbols alpha_1..alpha_{P} (table built internally).
std::pair<PolyCoeff, SymbolTablePtr> table_coefficient_generic(int P, int n);

// Noncommutative representation: D = 1 + sum a_P p^P, T at p^P = b_{P-2}.
// a indexed from 1, b indexed from -1; under grading, a_P must carry
// alpha-weight P and b_j weight j+2.
XPCommutator xp_noncommutative(const CoeffSeq& a, const CoeffSeq& b, int order,
                               const SymbolTablePtr& table);

// C at p^{P-1} = -sum_{n=0}^P a_n [ (P-n+1) a_{P-n+1} + (n-1) b_{P-n-1} ].
XXCommutator xx_noncommutative(const CoeffSeq& a, const CoeffSeq& b, int order,
                               const SymbolTablePtr& table);

// Commutative representation from the alpha family:
// D at p^P = sum_n alpha_n c_{P-n}^(n), T at p^P = sum_n n alpha_n c_{P-n}^(n).
XPCommutator xp_commutative(const CoeffSeq& alphas, int order, const SymbolTablePtr& table);

struct CommutativityResult {
  bool commutative = true;
  // First nonvanishing coefficient of the xx commutator, when any.
  std::optional<int> witness_power;
  PolyCoeff witness;
};

// True iff every coefficient of [x_i,x_j] vanishes identically through
// alpha-weight `order` (p-powers up to order-2, since the coefficient of
// p^m carries weight m+2 for graded inputs).
CommutativityResult commutativity_check(const CoeffSeq& a, const CoeffSeq& b, int order,
                                        const SymbolTablePtr& table);

// Powers of a unit-constant series: returns [A^0, A^1, ..., A^maxn].
std::vector<MomentumSeries> power_table(const MomentumSeries& a, int maxn);

}  // namespace igup

#endif
