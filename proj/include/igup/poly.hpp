#ifndef IGUP_POLY_HPP
#define IGUP_POLY_HPP

#include <map>
#include <optional>
#include <string>

#include "igup/rational.hpp"
#include "igup/symbol.hpp"

namespace igup {

// Sparse monomial: symbol index -> exponent (> 0). Empty map is the unit.
using Monomial = std::map<unsigned, unsigned>;

inline int monomial_weight(const Monomial& m, const SymbolTable& table) {
  int w = 0;
  for (auto [idx, exp] : m) w += static_cast<int>(exp) * table.at(idx).weight;
  return w;
}

// Multivariate polynomial in the declared formal parameters, over exact
// rationals. Zero coefficients are never stored.
class PolyCoeff {
 public:
  PolyCoeff() = default;

  static PolyCoeff constant(Rational r) {
    PolyCoeff p;
    if (r != 0) p.terms_[Monomial{}] = std::move(r);
    return p;
  }

  static PolyCoeff symbol(unsigned index, unsigned exp = 1, Rational coeff = 1) {
    PolyCoeff p;
    if (coeff != 0 && exp > 0)
      p.terms_[Monomial{{index, exp}}] = std::move(coeff);
    else if (coeff != 0)
      p.terms_[Monomial{}] = std::move(coeff);
    return p;
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }

  // Constant part (the monomial-free term).
  Rational constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  PolyCoeff& operator+=(const PolyCoeff& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  PolyCoeff& operator-=(const PolyCoeff& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend PolyCoeff operator+(PolyCoeff a, const PolyCoeff& b) { return a += b; }
  friend PolyCoeff operator-(PolyCoeff a, const PolyCoeff& b) { return a -= b; }

  friend PolyCoeff operator*(const PolyCoeff& a, const PolyCoeff& b) {
    PolyCoeff r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (auto [idx, exp] : mb) m[idx] += exp;
        r.add_term(m, ca * cb);
      }
    return r;
  }

  friend PolyCoeff operator*(PolyCoeff a, const Rational& s) {
    if (s == 0) return PolyCoeff{};
    for (auto& [m, c] : a.terms_) c *= s;
    return a;
  }
  friend PolyCoeff operator*(const Rational& s, PolyCoeff a) { return std::move(a) * s; }

  PolyCoeff operator-() const { return *this * Rational(-1); }

  friend bool operator==(const PolyCoeff& a, const PolyCoeff& b) {
    return a.terms_ == b.terms_;
  }

  // Total alpha-weight, defined only when all monomials agree.
  // Returns nullopt for mixed-weight polynomials; zero matches any weight.
  std::optional<int> uniform_weight(const SymbolTable& table) const {
    std::optional<int> w;
    for (const auto& [m, c] : terms_) {
      int mw = monomial_weight(m, table);
      if (w && *w != mw) return std::nullopt;
      w = mw;
    }
    return w ? w : std::optional<int>(0);  // zero polynomial: weight-free
  }

  bool is_homogeneous_of_weight(int w, const SymbolTable& table) const {
    for (const auto& [m, c] : terms_)
      if (monomial_weight(m, table) != w) return false;
    return true;
  }

  // Substitute float values for all symbols.
  double evaluate(const std::vector<double>& values) const {
    double acc = 0;
    for (const auto& [m, c] : terms_) {
      double t = to_double(c);
      for (auto [idx, exp] : m) {
        if (idx >= values.size()) throw error("missing parameter binding");
        for (unsigned e = 0; e < exp; ++e) t *= values[idx];
      }
      acc += t;
    }
    return acc;
  }

 private:
  std::map<Monomial, Rational> terms_;
};

std::string to_string(const PolyCoeff& p, const SymbolTable& table);
PolyCoeff parse_poly(const std::string& text, const SymbolTable& table);

}  // namespace igup

#endif
