#include "igup/convert.hpp"

namespace igup {

namespace {

MomentumSeries multiplier_from(const CoeffSeq& alphas, int order, const SymbolTablePtr& table) {
  MomentumSeries h = MomentumSeries::one(table, order);
  for (int n = 1; n <= order; ++n)
    if (!alphas.at(n).is_zero()) h.set_coeff(n, alphas.at(n));
  return h;
}

}  // namespace

CoeffSeq alpha_to_a(const CoeffSeq& alphas, int order, const SymbolTablePtr& table) {
  XPCommutator c = xp_commutative(alphas, order, table);
  CoeffSeq a{1, {}};
  for (int P = 1; P <= order; ++P) a.entries.push_back(c.delta_part.coeff(P));
  return a;
}

CoeffSeq alpha_to_b(const CoeffSeq& alphas, int order, const SymbolTablePtr& table) {
  // b_{P-1} needs c^{(n)}_{P-n+1}, one order beyond the delta sums.
  MomentumSeries h = multiplier_from(alphas, order + 1, table);
  auto cpow = power_table(revert(h), order + 2);
  CoeffSeq b{-1, {}};
  for (int Pm1 = -1; Pm1 <= order - 2; ++Pm1) {
    int P = Pm1 + 1;
    PolyCoeff acc;
    for (int n = 1; n <= P + 1; ++n) {
      const PolyCoeff& alpha_n = alphas.at(n);
      if (alpha_n.is_zero()) continue;
      acc += Rational(n) * (alpha_n * cpow[static_cast<std::size_t>(n)].coeff(P - n + 1));
    }
    b.entries.push_back(std::move(acc));
  }
  return b;
}

CoeffSeq a_to_alpha(const CoeffSeq& a, int order, const SymbolTablePtr& table) {
  if (a.first < 1) throw error("a sequence indexed from 1 (a_0 = 1 implicit)");
  CoeffSeq alphas{1, {}};
  for (int P = 1; P <= order; ++P) {
    // a_P = alpha_P + sum_{n=1}^{P-1} alpha_n c_{P-n}^(n), with the c's
    // depending only on alpha_1..alpha_{P-1}.
    MomentumSeries h = multiplier_from(alphas, std::max(P - 1, 1), table);
    auto cpow = power_table(revert(h), P - 1);
    PolyCoeff rest;
    for (int n = 1; n <= P - 1; ++n)
      rest += alphas.at(n) * cpow[static_cast<std::size_t>(n)].coeff(P - n);
    alphas.entries.push_back(a.at(P) - rest);
  }
  return alphas;
}

MomentumSeries reduce_1d(const XPCommutator& c) {
  return c.delta_part + c.tensor_part;
}

CommutativeExtension extend_1d_commutative(const MomentumSeries& F, int order) {
  if (!(F.coeff(0) == PolyCoeff::constant(1)))
    throw error("generator F must have F(0) = 1");
  const SymbolTablePtr& table = F.table();
  auto F_at = [&](int P) { return P <= F.order() ? F.coeff(P) : PolyCoeff{}; };

  CoeffSeq alphas{1, {}};
  for (int P = 1; P <= order; ++P) {
    // sum_{n=1}^P (1+n) alpha_n c_{P-n}^(n) = F_P; leading coefficient (1+P).
    MomentumSeries h = multiplier_from(alphas, std::max(P - 1, 1), table);
    auto cpow = power_table(revert(h), P - 1);
    PolyCoeff rest;
    for (int n = 1; n <= P - 1; ++n)
      rest += Rational(1 + n) * (alphas.at(n) * cpow[static_cast<std::size_t>(n)].coeff(P - n));
    alphas.entries.push_back((F_at(P) - rest) * Rational(1, 1 + P));
  }

  // Integral route: f = p / integral(F^-1 dp) = 1 / (integral(F^-1)/p).
  MomentumSeries Ft = F.order() >= order ? F.truncated(order) : F;
  MomentumSeries integral = antiderivative(reciprocal(Ft));  // starts at p^1
  // Divide by p: the constant of integration is zero, so re-root the
  // series at p^0 (a plain shift would leave a vacuous p^-1 slot).
  std::vector<PolyCoeff> ratio_coeffs;
  for (int k = 1; k <= integral.order(); ++k) ratio_coeffs.push_back(integral.coeff(k));
  MomentumSeries ratio(table, 0, integral.order() - 1, std::move(ratio_coeffs));
  MomentumSeries f = reciprocal(ratio).truncated(order);

  // The two routes must agree (the b-equation adds no extra constraint).
  CoeffSeq a = alpha_to_a(alphas, order, table);
  for (int P = 1; P <= std::min(order, f.order()); ++P)
    if (!(a.at(P) == f.coeff(P)))
      throw error("internal: integral and alpha-constraint routes disagree at order " +
                  std::to_string(P));
  return {std::move(alphas), std::move(f)};
}

XPCommutator extend_1d_noncommutative(const MomentumSeries& F, const MomentumSeries& f) {
  if (!(F.coeff(0) == PolyCoeff::constant(1)) || !(f.coeff(0) == PolyCoeff::constant(1)))
    throw error("F and f must both have unit constant term");
  MomentumSeries T = F - f;
  if (!T.coeff(0).is_zero()) throw error("tensor part with nonzero p^0 term");
  return {f.truncated(T.order()), std::move(T)};
}

}  // namespace igup
