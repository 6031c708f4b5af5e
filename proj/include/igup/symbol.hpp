#ifndef IGUP_SYMBOL_HPP
#define IGUP_SYMBOL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "igup/rational.hpp"

namespace igup {

// A formal model parameter. `weight` is the alpha-dimension exponent:
// the parameter carries units [alpha]^weight with [alpha] = [p]^-1.
struct ParamSymbol {
  std::string name;
  int weight = 0;

  friend bool operator==(const ParamSymbol&, const ParamSymbol&) = default;
};

// Immutable set of symbols declared for one computation context.
// Series and polynomials refer to symbols by index into this table.
class SymbolTable {
 public:
  SymbolTable() = default;
  explicit SymbolTable(std::vector<ParamSymbol> symbols) : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      for (std::size_t j = i + 1; j < symbols_.size(); ++j)
        if (symbols_[i].name == symbols_[j].name)
          throw error("duplicate symbol name '" + symbols_[i].name + "'");
    for (const auto& s : symbols_)
      if (s.weight < 0) throw error("symbol weight must be >= 0");
  }

  std::size_t size() const { return symbols_.size(); }
  const ParamSymbol& at(std::size_t i) const { return symbols_.at(i); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i].name == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const SymbolTable& a, const SymbolTable& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<ParamSymbol> symbols_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

inline SymbolTablePtr make_table(std::vector<ParamSymbol> symbols) {
  return std::make_shared<const SymbolTable>(std::move(symbols));
}

inline bool same_table(const SymbolTablePtr& a, const SymbolTablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return (a ? a->size() : 0) == 0 && (b ? b->size() : 0) == 0;
  return *a == *b;
}

}  // namespace igup

#endif
