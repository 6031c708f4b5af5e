#include "igup/commutator.hpp"

namespace igup {

namespace {

// Build the multiplier series h(rho) = 1 + sum alpha_n rho^n to `order`.
MomentumSeries multiplier_series(const CoeffSeq& alphas, int order, const SymbolTablePtr& table) {
  MomentumSeries h = MomentumSeries::one(table, order);
  for (int n = 1; n <= order; ++n)
    if (!alphas.at(n).is_zero()) h.set_coeff(n, alphas.at(n));
  return h;
}

void require_weight(const PolyCoeff& c, int w, const SymbolTablePtr& table,
                    const char* what) {
  static const SymbolTable empty_table;
  const SymbolTable& tbl = table ? *table : empty_table;
  if (!c.is_homogeneous_of_weight(w, tbl))
    throw error(std::string("mis-weighted ") + what + " coefficient at index " +
                std::to_string(w));
}

}  // namespace

std::vector<MomentumSeries> power_table(const MomentumSeries& a, int maxn) {
  std::vector<MomentumSeries> powers;
  powers.reserve(static_cast<std::size_t>(maxn + 1));
  for (int n = 0; n <= maxn; ++n) powers.push_back(pow_series(a, n));
  return powers;
}

PolyCoeff table_coefficient(int P, int n, const CoeffSeq& alphas, const SymbolTablePtr& table) {
  if (n < 0 || n > P) throw error("table_coefficient requires 0 <= n <= P");
  if (n == 0) return P == 0 ? PolyCoeff::constant(1) : PolyCoeff{};
  int m = P - n;
  MomentumSeries h = multiplier_series(alphas, std::max(m, 1), table);
  MomentumSeries A = revert(h);
  return pow_series(A, n).coeff(m);
}

std::pair<PolyCoeff, SymbolTablePtr> table_coefficient_generic(int P, int n) {
  std::vector<ParamSymbol> symbols;
  for (int i = 1; i <= std::max(P, 1); ++i)
    symbols.push_back({"alpha" + std::to_string(i), i});
  SymbolTablePtr table = make_table(std::move(symbols));
  CoeffSeq alphas{1, {}};
  for (int i = 1; i <= std::max(P, 1); ++i)
    alphas.entries.push_back(PolyCoeff::symbol(static_cast<unsigned>(i - 1)));
  return {table_coefficient(P, n, alphas, table), table};
}

XPCommutator xp_noncommutative(const CoeffSeq& a, const CoeffSeq& b, int order,
                               const SymbolTablePtr& table) {
  if (a.first < 1) throw error("a sequence indexed from 1");
  if (b.first < -1) throw error("b sequence indexed from -1");
  for (int i = a.first; i <= a.last(); ++i) require_weight(a.at(i), i, table, "a");
  for (int j = b.first; j <= b.last(); ++j) require_weight(b.at(j), j + 2, table, "b");

  MomentumSeries D = MomentumSeries::one(table, order);
  MomentumSeries T(table, 0, order, {});
  for (int P = 1; P <= order; ++P) {
    if (!a.at(P).is_zero()) D.set_coeff(P, a.at(P));
    if (!b.at(P - 2).is_zero()) T.set_coeff(P, b.at(P - 2));
  }
  return {std::move(D), std::move(T)};
}

XXCommutator xx_noncommutative(const CoeffSeq& a, const CoeffSeq& b, int order,
                               const SymbolTablePtr& table) {
  if (a.first < 1) throw error("a sequence indexed from 1");
  if (b.first < -1) throw error("b sequence indexed from -1");
  for (int i = a.first; i <= a.last(); ++i) require_weight(a.at(i), i, table, "a");
  for (int j = b.first; j <= b.last(); ++j) require_weight(b.at(j), j + 2, table, "b");

  auto a_full = [&](int n) {
    return n == 0 ? PolyCoeff::constant(1) : a.at(n);
  };
  MomentumSeries C(table, -1, order, {});
  for (int P = 0; P <= order + 1; ++P) {
    PolyCoeff acc;
    for (int n = 0; n <= P; ++n) {
      PolyCoeff an = a_full(n);
      if (an.is_zero()) continue;
      PolyCoeff inner = Rational(P - n + 1) * a_full(P - n + 1) + Rational(n - 1) * b.at(P - n - 1);
      acc += an * inner;
    }
    if (P - 1 <= order) C.set_coeff(P - 1, -acc);
  }
  return {std::move(C)};
}

XPCommutator xp_commutative(const CoeffSeq& alphas, int order, const SymbolTablePtr& table) {
  if (alphas.first < 1) throw error("alpha sequence indexed from 1");
  for (int i = alphas.first; i <= alphas.last(); ++i)
    require_weight(alphas.at(i), i, table, "alpha");

  MomentumSeries h = multiplier_series(alphas, order, table);
  auto cpow = power_table(revert(h), order);
  MomentumSeries D(table, 0, order, {});
  MomentumSeries T(table, 0, order, {});
  for (int P = 0; P <= order; ++P) {
    PolyCoeff d, t;
    for (int n = 0; n <= P; ++n) {
      const PolyCoeff alpha_n = n == 0 ? PolyCoeff::constant(1) : alphas.at(n);
      if (alpha_n.is_zero()) continue;
      PolyCoeff c = cpow[static_cast<std::size_t>(n)].coeff(P - n);
      d += alpha_n * c;
      t += Rational(n) * (alpha_n * c);
    }
    D.set_coeff(P, std::move(d));
    T.set_coeff(P, std::move(t));
  }
  return {std::move(D), std::move(T)};
}

CommutativityResult commutativity_check(const CoeffSeq& a, const CoeffSeq& b, int order,
                                        const SymbolTablePtr& table) {
  XXCommutator xx = xx_noncommutative(a, b, std::max(order - 2, -1), table);
  CommutativityResult res;
  for (int m = -1; m <= order - 2; ++m) {
    if (!xx.coeff.coeff(m).is_zero()) {
      res.commutative = false;
      res.witness_power = m;
      res.witness = xx.coeff.coeff(m);
      return res;
    }
  }
  return res;
}

}  // namespace igup
