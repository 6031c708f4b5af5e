#include "igup/series.hpp"

#include <algorithm>

namespace igup {

MomentumSeries::MomentumSeries(SymbolTablePtr table, int min_power, int order,
                               std::vector<PolyCoeff> coeffs)
    : table_(std::move(table)), min_power_(min_power), order_(order),
      coeffs_(std::move(coeffs)) {
  if (min_power_ < -1) throw error("series pole deeper than p^-1");
  if (order_ < min_power_) throw error("truncation order below min power");
  coeffs_.resize(static_cast<std::size_t>(order_ - min_power_ + 1));
  recompute_graded();
}

MomentumSeries MomentumSeries::constant(SymbolTablePtr table, Rational c, int order) {
  std::vector<PolyCoeff> coeffs(static_cast<std::size_t>(order + 1));
  coeffs[0] = PolyCoeff::constant(std::move(c));
  return MomentumSeries(std::move(table), 0, order, std::move(coeffs));
}

void MomentumSeries::recompute_graded() {
  static const SymbolTable empty_table;
  const SymbolTable& tbl = table_ ? *table_ : empty_table;
  graded_ = true;
  for (int k = min_power_; k <= order_; ++k) {
    const PolyCoeff& c = coeffs_[static_cast<std::size_t>(k - min_power_)];
    if (!c.is_zero() && !c.is_homogeneous_of_weight(k, tbl)) {
      graded_ = false;
      return;
    }
  }
}

const PolyCoeff& MomentumSeries::coeff(int power) const {
  static const PolyCoeff zero{};
  if (power > order_) throw error("coefficient beyond truncation order");
  if (power < min_power_) return zero;
  return coeffs_[static_cast<std::size_t>(power - min_power_)];
}

void MomentumSeries::set_coeff(int power, PolyCoeff c) {
  if (power < min_power_ || power > order_) throw error("power out of range");
  coeffs_[static_cast<std::size_t>(power - min_power_)] = std::move(c);
  recompute_graded();
}

bool MomentumSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const PolyCoeff& c) { return c.is_zero(); });
}

MomentumSeries MomentumSeries::truncated(int new_order) const {
  if (new_order >= order_) return *this;
  std::vector<PolyCoeff> coeffs(coeffs_.begin(),
                                coeffs_.begin() + (new_order - min_power_ + 1));
  return MomentumSeries(table_, min_power_, new_order, std::move(coeffs));
}

static void require_same_table(const MomentumSeries& a, const MomentumSeries& b) {
  if (!same_table(a.table(), b.table())) throw error("symbol-table mismatch");
}

MomentumSeries operator+(const MomentumSeries& a, const MomentumSeries& b) {
  require_same_table(a, b);
  int mp = std::min(a.min_power(), b.min_power());
  int order = std::min(a.order(), b.order());
  std::vector<PolyCoeff> coeffs;
  for (int k = mp; k <= order; ++k) {
    PolyCoeff c;
    if (k >= a.min_power()) c += a.coeff(k);
    if (k >= b.min_power()) c += b.coeff(k);
    coeffs.push_back(std::move(c));
  }
  return MomentumSeries(a.table(), mp, order, std::move(coeffs));
}

MomentumSeries operator-(const MomentumSeries& a, const MomentumSeries& b) {
  require_same_table(a, b);
  int mp = std::min(a.min_power(), b.min_power());
  int order = std::min(a.order(), b.order());
  std::vector<PolyCoeff> coeffs;
  for (int k = mp; k <= order; ++k) {
    PolyCoeff c;
    if (k >= a.min_power()) c += a.coeff(k);
    if (k >= b.min_power()) c -= b.coeff(k);
    coeffs.push_back(std::move(c));
  }
  return MomentumSeries(a.table(), mp, order, std::move(coeffs));
}

bool operator==(const MomentumSeries& a, const MomentumSeries& b) {
  if (!same_table(a.table(), b.table())) return false;
  if (a.order() != b.order()) return false;
  int mp = std::min(a.min_power(), b.min_power());
  for (int k = mp; k <= a.order(); ++k) {
    const PolyCoeff& ca = k >= a.min_power() ? a.coeff(k) : PolyCoeff{};
    const PolyCoeff& cb = k >= b.min_power() ? b.coeff(k) : PolyCoeff{};
    if (!(ca == cb)) return false;
  }
  return true;
}

MomentumSeries mul(const MomentumSeries& a, const MomentumSeries& b) {
  require_same_table(a, b);
  int mp = a.min_power() + b.min_power();
  if (mp < -1) throw error("product pole deeper than p^-1");
  int order = std::min(a.order() + b.min_power(), b.order() + a.min_power());
  std::vector<PolyCoeff> coeffs(static_cast<std::size_t>(order - mp + 1));
  for (int i = a.min_power(); i <= a.order(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = b.min_power(); j <= b.order(); ++j) {
      int k = i + j;
      if (k > order) break;
      coeffs[static_cast<std::size_t>(k - mp)] += a.coeff(i) * b.coeff(j);
    }
  }
  return MomentumSeries(a.table(), mp, order, std::move(coeffs));
}

MomentumSeries pow_series(const MomentumSeries& a, int n) {
  if (n < 0) throw error("negative power");
  if (a.min_power() != 0) throw error("pow requires min_power 0");
  if (!(a.coeff(0) == PolyCoeff::constant(1))) throw error("pow requires unit constant term");
  int order = a.order();
  std::vector<PolyCoeff> c(static_cast<std::size_t>(order + 1));
  c[0] = PolyCoeff::constant(1);
  if (n == 0) {
    // c_m^(0) = 0 for m >= 1
    return MomentumSeries(a.table(), 0, order, std::move(c));
  }
  for (int m = 1; m <= order; ++m) {
    PolyCoeff acc;
    for (int s = 1; s <= m; ++s) {
      Rational factor(static_cast<long>(s) * n - m + s, m);
      if (factor == 0) continue;
      acc += factor * (a.coeff(s) * c[static_cast<std::size_t>(m - s)]);
    }
    c[static_cast<std::size_t>(m)] = std::move(acc);
  }
  return MomentumSeries(a.table(), 0, order, std::move(c));
}

MomentumSeries reciprocal(const MomentumSeries& a) {
  if (a.min_power() != 0) throw error("reciprocal requires min_power 0");
  const PolyCoeff& c0 = a.coeff(0);
  if (!c0.is_constant() || c0.is_zero())
    throw error("reciprocal requires a nonzero rational constant term");
  Rational inv0 = Rational(1) / c0.constant_value();
  int order = a.order();
  std::vector<PolyCoeff> b(static_cast<std::size_t>(order + 1));
  b[0] = PolyCoeff::constant(inv0);
  for (int m = 1; m <= order; ++m) {
    PolyCoeff acc;
    for (int k = 1; k <= m; ++k)
      acc += a.coeff(k) * b[static_cast<std::size_t>(m - k)];
    b[static_cast<std::size_t>(m)] = acc * (-inv0);
  }
  return MomentumSeries(a.table(), 0, order, std::move(b));
}

MomentumSeries antiderivative(const MomentumSeries& a) {
  if (a.min_power() < 0) throw error("antiderivative of a p^-1 term");
  int order = a.order() + 1;
  std::vector<PolyCoeff> coeffs(static_cast<std::size_t>(order + 1));
  for (int m = 0; m <= a.order(); ++m)
    coeffs[static_cast<std::size_t>(m + 1)] = a.coeff(m) * Rational(1, m + 1);
  return MomentumSeries(a.table(), 0, order, std::move(coeffs));
}

MomentumSeries shift(const MomentumSeries& a, int delta) {
  int mp = a.min_power() + delta;
  if (mp < -1) throw error("shift below p^-1");
  std::vector<PolyCoeff> coeffs;
  for (int k = a.min_power(); k <= a.order(); ++k) coeffs.push_back(a.coeff(k));
  return MomentumSeries(a.table(), mp, a.order() + delta, std::move(coeffs));
}

MomentumSeries revert(const MomentumSeries& h) {
  if (h.min_power() != 0) throw error("revert requires min_power 0");
  if (!(h.coeff(0) == PolyCoeff::constant(1)))
    throw error("revert requires unit constant term");
  if (h.order() < 1) throw error("revert requires truncation order >= 1");
  int N = h.order();
  // q[r][s], r,s = 0..N
  std::vector<std::vector<PolyCoeff>> q(static_cast<std::size_t>(N + 1),
                                        std::vector<PolyCoeff>(static_cast<std::size_t>(N + 1)));
  q[0][0] = PolyCoeff::constant(1);
  for (int s = 1; s <= N; ++s)
    for (int r = s; r <= N; ++r) {
      PolyCoeff acc;
      for (int i = 1; i <= r - s + 1; ++i)
        acc += h.coeff(i) * q[static_cast<std::size_t>(r - i)][static_cast<std::size_t>(s - 1)];
      q[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = std::move(acc);
    }
  std::vector<PolyCoeff> A(static_cast<std::size_t>(N + 1));
  for (int r = 0; r <= N; ++r) {
    PolyCoeff acc;
    for (int s = 0; s <= r; ++s) {
      Rational factor = binomial(r + s + 1, s) * Rational((s % 2 == 0) ? 1 : -1, r + s + 1);
      acc += factor * q[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
    }
    A[static_cast<std::size_t>(r)] = std::move(acc);
  }
  return MomentumSeries(h.table(), 0, N, std::move(A));
}

MomentumSeries scale(const MomentumSeries& a, const PolyCoeff& c) {
  std::vector<PolyCoeff> coeffs;
  for (int k = a.min_power(); k <= a.order(); ++k) coeffs.push_back(a.coeff(k) * c);
  return MomentumSeries(a.table(), a.min_power(), a.order(), std::move(coeffs));
}

MomentumSeries compose(const MomentumSeries& outer, const MomentumSeries& inner) {
  require_same_table(outer, inner);
  if (inner.min_power() != 0 || !(inner.coeff(0) == PolyCoeff::constant(1)))
    throw error("compose requires a unit-constant multiplier series");
  int order = std::min(outer.order(), inner.order() + outer.min_power());
  int mp = outer.min_power();
  MomentumSeries result(outer.table(), mp, order,
                        std::vector<PolyCoeff>(static_cast<std::size_t>(order - mp + 1)));
  MomentumSeries inner_t = inner.truncated(std::min(inner.order(), order - mp));
  for (int k = outer.min_power(); k <= std::min(outer.order(), order); ++k) {
    if (outer.coeff(k).is_zero()) continue;
    // v^k * inner(v)^k
    MomentumSeries powk = k >= 0 ? pow_series(inner_t, k) : reciprocal(inner_t);
    result = result + scale(shift(powk, k), outer.coeff(k));
  }
  return result;
}

}  // namespace igup
