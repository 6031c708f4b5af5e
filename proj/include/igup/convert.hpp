#ifndef IGUP_CONVERT_HPP
#define IGUP_CONVERT_HPP

#include "igup/commutator.hpp"

namespace igup {

// Conversions between the three parameter families. All maps are
// triangular: entry P depends only on inputs with index <= P.

// a_P = sum_{n=0}^P alpha_n c_{P-n}^(n); a_0 = 1. Returned indexed from 1.
CoeffSeq alpha_to_a(const CoeffSeq& alphas, int order, const SymbolTablePtr& table);

// b_{P-1} = sum_{n=1}^{P+1} n alpha_n c_{P-n+1}^(n). Indexed from -1.
CoeffSeq alpha_to_b(const CoeffSeq& alphas, int order, const SymbolTablePtr& table);

// Unique alpha-sequence with alpha_to_a(result) = a. Requires a_0 = 1
// implicitly (a indexed from 1).
CoeffSeq a_to_alpha(const CoeffSeq& a, int order, const SymbolTablePtr& table);

// 1D reduction F_P = a_P + b_{P-2}, i.e. F = D + T.
MomentumSeries reduce_1d(const XPCommutator& c);

struct CommutativeExtension {
  CoeffSeq alphas;     // unique alpha family solving sum (1+n) alpha_n c_{P-n}^(n) = F_P
  MomentumSeries f;    // f = p / integral(F^-1 dp), f(0) = 1
};

// The unique commutative 3D extension of [x,p] = i hbar F(p).
// f is computed both by the integral formula and through the alpha
// constraint; the two routes are asserted to agree.
CommutativeExtension extend_1d_commutative(const MomentumSeries& F, int order);

// Noncommutative 3D extension for a caller-chosen delta part f:
// D = f, T = F - f.
XPCommutator extend_1d_noncommutative(const MomentumSeries& F, const MomentumSeries& f);

}  // namespace igup

#endif
