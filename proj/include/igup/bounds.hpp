#ifndef IGUP_BOUNDS_HPP
#define IGUP_BOUNDS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "igup/rational.hpp"

namespace igup {

// One published experimental limit, in Planck units: the bounded column
// p^n carries units (l_P/hbar)^n. `value` is the bound in the source
// model's own convention (beta_0 or alpha_0).
struct BoundRecord {
  int part = 0;  // table grouping 1..5
  std::string source;
  std::string reference;
  std::string convention;
  double value = 0;
  bool magnitude_only = false;  // bound quoted as an order of magnitude
  // Published entries per column: "-" none, "~1e37" magnitude only.
  std::map<std::string, std::string> printed;
};

inline const std::vector<std::string>& bound_columns() {
  static const std::vector<std::string> cols = {"alpha1", "alpha2", "a1+b-1", "a2+b0"};
  return cols;
}

// Derived limits on {alpha1, alpha2, a1+b-1, a2+b0} (absolute values),
// as applicable for the record's convention.
std::map<std::string, double> translate(const BoundRecord& record);

struct Discrepancy {
  std::string source;
  std::string column;
  std::string printed;
  double computed = 0;
};

std::vector<BoundRecord> load_bounds(const std::string& path);
std::vector<BoundRecord> load_bounds();  // the shipped dataset

// Re-derive every printed entry; returns the rows that disagree beyond
// the printed precision (2 significant figures, or exponent-only for
// magnitude entries). Nothing is corrected.
std::vector<Discrepancy> verify_dataset(const std::vector<BoundRecord>& records);

// Aligned plain-text rendering of the records (grouped by part, computed
// values to 2 significant figures, discrepancy flags appended).
std::string render_table(const std::vector<BoundRecord>& records);

// Helpers shared with tests: 2-significant-figure comparison and
// exponent-level comparison for "~" entries.
bool matches_printed(double computed, const std::string& printed);
std::string format_bound(double value, bool magnitude_only);

}  // namespace igup

#endif
