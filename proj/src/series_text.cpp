#include <cctype>
#include <sstream>

#include "igup/series.hpp"
#include "nlohmann/json.hpp"

namespace igup {

namespace {

std::string monomial_string(const Monomial& m, const SymbolTable& table) {
  std::string out;
  for (auto [idx, exp] : m) {
    if (!out.empty()) out += "*";
    out += table.at(idx).name + "^" + std::to_string(exp);
  }
  return out;
}

// One signed term: "num/den" or "num/den*mono". The sign is returned
// separately so callers can join terms with " + " / " - ".
std::string term_string(const Monomial& m, const Rational& c, const SymbolTable& table,
                        bool& negative) {
  Rational mag = c < 0 ? Rational(-c) : c;
  negative = c < 0;
  std::string mono = monomial_string(m, table);
  if (mono.empty()) return to_string(mag);
  if (mag == 1) return mono;
  return to_string(mag) + "*" + mono;
}

}  // namespace

std::string to_string(const PolyCoeff& p, const SymbolTable& table) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = false;
    std::string t = term_string(m, c, table, neg);
    if (first) {
      out += neg ? "-" + t : t;
      first = false;
    } else {
      out += neg ? " - " + t : " + " + t;
    }
  }
  return out;
}

std::string to_string(const MomentumSeries& s) {
  static const SymbolTable empty_table;
  const SymbolTable& table = s.table() ? *s.table() : empty_table;
  std::string out;
  bool first = true;
  for (int k = s.min_power(); k <= s.order(); ++k) {
    const PolyCoeff& c = s.coeff(k);
    if (c.is_zero()) continue;
    for (const auto& [m, r] : c.terms()) {
      bool neg = false;
      std::string t = term_string(m, r, table, neg);
      if (k != 0) {
        bool unit = t == "1";
        std::string pk = "p^" + std::to_string(k);
        t = unit ? pk : t + "*" + pk;
      }
      if (first) {
        out += neg ? "-" + t : t;
        first = false;
      } else {
        out += neg ? " - " + t : " + " + t;
      }
    }
  }
  return first ? "0" : out;
}

std::string to_json(const MomentumSeries& s) {
  static const SymbolTable empty_table;
  const SymbolTable& table = s.table() ? *s.table() : empty_table;
  nlohmann::json arr = nlohmann::json::array();
  for (int k = s.min_power(); k <= s.order(); ++k) {
    const PolyCoeff& c = s.coeff(k);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, r] : c.terms()) {
      nlohmann::json mono = nlohmann::json::object();
      for (auto [idx, exp] : m) mono[table.at(idx).name] = exp;
      terms.push_back({{"coeff", to_string(r)}, {"monomial", mono}});
    }
    arr.push_back({{"power", k}, {"terms", terms}});
  }
  return arr.dump();
}

namespace {

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& expected) {
    throw error("parse error at position " + std::to_string(pos_) + ": expected " + expected);
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("integer");
    return Integer(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("identifier");
    return text_.substr(start, pos_ - start);
  }

  bool next_is_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

struct ParsedTerm {
  Rational coeff = 1;
  Monomial mono;
  int power = 0;  // power of p
};

// term := factor (* factor)* ; factor := rational | name[^int] | p^int
ParsedTerm parse_term(Lexer& lex, const SymbolTable& table) {
  ParsedTerm t;
  bool first = true;
  do {
    if (lex.next_is_digit()) {
      Integer num = lex.integer();
      if (lex.accept('/')) {
        Integer den = lex.integer();
        if (den == 0) lex.fail("nonzero denominator");
        t.coeff *= Rational(num, den);
      } else {
        t.coeff *= Rational(num);
      }
    } else {
      std::string name = lex.identifier();
      long exp = 1;
      if (lex.accept('^')) {
        bool neg = lex.accept('-');
        exp = lex.integer().convert_to<long>();
        if (neg) exp = -exp;
      }
      if (name == "p") {
        if (exp < -1) lex.fail("p power >= -1");
        t.power += static_cast<int>(exp);
      } else {
        auto idx = table.index_of(name);
        if (!idx) throw error("unknown symbol '" + name + "'");
        if (exp < 0) lex.fail("nonnegative symbol exponent");
        if (exp > 0) t.mono[static_cast<unsigned>(*idx)] += static_cast<unsigned>(exp);
      }
    }
    first = false;
  } while (lex.accept('*'));
  (void)first;
  return t;
}

std::vector<ParsedTerm> parse_sum(Lexer& lex, const SymbolTable& table) {
  std::vector<ParsedTerm> terms;
  bool neg = false;
  if (lex.accept('-')) neg = true;
  else lex.accept('+');
  while (true) {
    ParsedTerm t = parse_term(lex, table);
    if (neg) t.coeff = -t.coeff;
    terms.push_back(std::move(t));
    if (lex.accept('+')) neg = false;
    else if (lex.accept('-')) neg = true;
    else break;
  }
  if (!lex.done()) lex.fail("'+', '-', or end of input");
  return terms;
}

}  // namespace

PolyCoeff parse_poly(const std::string& text, const SymbolTable& table) {
  Lexer lex(text);
  PolyCoeff p;
  for (auto& t : parse_sum(lex, table)) {
    if (t.power != 0) throw error("unexpected p power in polynomial");
    p.add_term(t.mono, t.coeff);
  }
  return p;
}

MomentumSeries parse_series(const std::string& text, SymbolTablePtr table, int order) {
  static const SymbolTable empty_table;
  const SymbolTable& tbl = table ? *table : empty_table;
  Lexer lex(text);
  auto terms = parse_sum(lex, tbl);
  int mp = 0;
  for (const auto& t : terms) mp = std::min(mp, t.power);
  MomentumSeries s(table, mp, order,
                   std::vector<PolyCoeff>(static_cast<std::size_t>(order - mp + 1)));
  for (const auto& t : terms) {
    if (t.power > order) throw error("term power exceeds requested truncation order");
    PolyCoeff c = s.coeff(t.power);
    c.add_term(t.mono, t.coeff);
    s.set_coeff(t.power, std::move(c));
  }
  return s;
}

}  // namespace igup
