#include "igup/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "igup/model.hpp"  // default_data_dir

namespace igup {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return out;
}

int exponent_of(double v) { return static_cast<int>(std::floor(std::log10(v))); }

// Number of significant digits in a printed mantissa like "2.23" or "5".
int sig_figs(const std::string& printed) {
  int n = 0;
  for (char c : printed) {
    if (c == 'e' || c == 'E') break;
    if (std::isdigit(static_cast<unsigned char>(c))) ++n;
  }
  return std::max(n, 1);
}

double round_sig(double v, int figs) {
  if (v == 0) return 0;
  double scale = std::pow(10.0, figs - 1 - exponent_of(v));
  return std::round(v * scale) / scale;
}

}  // namespace

std::map<std::string, double> translate(const BoundRecord& r) {
  if (r.value <= 0) throw error("bound value must be positive");
  const double v = r.value;
  const std::string& c = r.convention;
  // KMM's 1D model: a2+b0 = beta; commutative alpha2 = beta/3 (tan-series).
  if (c == "KMM1D-beta0" || c == "gravitational-beta")
    return {{"alpha2", v / 3}, {"a2+b0", v}};
  // Kempf's noncommutative model: a2+b0 < beta+betap; the beta'=2beta
  // commutative case gives alpha2 = beta at the same level.
  if (c == "Kempf-beta0") return {{"alpha2", v}, {"a2+b0", v}};
  // Kempf's approximately commutative model used in 3D: alpha2 = beta.
  if (c == "Kempf-commutative-beta0-3d") return {{"alpha2", v}};
  // Same model probed by a 1D system: [x,p] = i hbar (1 + 3 beta p^2).
  if (c == "Kempf-commutative-beta0-1d") return {{"alpha2", v}, {"a2+b0", 3 * v}};
  // ADV: alpha1 = -alpha, alpha2 = 2 alpha^2 (absolute values reported).
  if (c == "ADV-alpha0-3d") return {{"alpha1", v}, {"alpha2", 2 * v * v}};
  if (c == "ADV-alpha0-1d")
    return {{"alpha1", v}, {"alpha2", 2 * v * v}, {"a1+b-1", 2 * v}, {"a2+b0", 4 * v * v}};
  // SME-coefficient comparisons constrain a2+b0 and alpha2 at the same level.
  if (c == "SME-beta") return {{"alpha2", v}, {"a2+b0", v}};
  throw error("unknown bound convention '" + c + "'");
}

std::vector<BoundRecord> load_bounds(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open bounds dataset: " + path);
  std::vector<BoundRecord> records;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 10)
      throw error(path + ":" + std::to_string(lineno) + ": expected 10 tab-separated fields");
    BoundRecord r;
    r.part = std::stoi(fields[0]);
    r.source = fields[1];
    r.reference = fields[2];
    r.convention = fields[3];
    r.value = std::stod(fields[4]);
    r.magnitude_only = fields[5] == "1";
    const auto& cols = bound_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) r.printed[cols[i]] = fields[6 + i];
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<BoundRecord> load_bounds() { return load_bounds(default_data_dir() + "/bounds.tsv"); }

bool matches_printed(double computed, const std::string& printed) {
  if (printed == "-") return false;
  if (printed[0] == '~') {
    double target = std::stod(printed.substr(1));
    return exponent_of(computed) == exponent_of(target);
  }
  double target = std::stod(printed);
  double rounded = round_sig(computed, sig_figs(printed));
  return std::abs(rounded - target) <= 1e-9 * std::abs(target);
}

std::vector<Discrepancy> verify_dataset(const std::vector<BoundRecord>& records) {
  std::vector<Discrepancy> out;
  for (const auto& r : records) {
    auto derived = translate(r);
    for (const auto& col : bound_columns()) {
      auto it = r.printed.find(col);
      if (it == r.printed.end() || it->second == "-") continue;
      auto dit = derived.find(col);
      if (dit == derived.end()) {
        out.push_back({r.source, col, it->second, 0});
        continue;
      }
      if (!matches_printed(dit->second, it->second))
        out.push_back({r.source, col, it->second, dit->second});
    }
  }
  return out;
}

std::string format_bound(double value, bool magnitude_only) {
  if (magnitude_only) return "~1e" + std::to_string(exponent_of(value));
  double r = round_sig(value, 2);
  int e = exponent_of(r);
  double mantissa = r / std::pow(10.0, e);
  char buf[32];
  // Drop a trailing ".0" so 5e70 is not rendered as 5.0e70.
  if (std::abs(mantissa - std::round(mantissa)) < 1e-9)
    std::snprintf(buf, sizeof buf, "%de%d", static_cast<int>(std::round(mantissa)), e);
  else
    std::snprintf(buf, sizeof buf, "%.1fe%d", mantissa, e);
  return buf;
}

std::string render_table(const std::vector<BoundRecord>& records) {
  const auto& cols = bound_columns();
  std::vector<std::string> headers = {"Source", "alpha1", "alpha2", "a1+b-1", "a2+b0", "Ref."};
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> flags;
  std::vector<int> parts;

  for (const auto& r : records) {
    auto derived = translate(r);
    std::vector<std::string> row = {r.source};
    for (const auto& col : cols) {
      auto dit = derived.find(col);
      std::string printed = r.printed.count(col) ? r.printed.at(col) : "-";
      if (dit == derived.end()) {
        row.push_back("-");
        continue;
      }
      std::string cell = format_bound(dit->second, r.magnitude_only);
      if (printed != "-" && !matches_printed(dit->second, printed)) {
        cell += " [FLAG]";
        flags.push_back(r.source + " " + col + ": published " + printed + ", computed " +
                        format_bound(dit->second, false));
      }
      row.push_back(std::move(cell));
    }
    row.push_back(r.reference);
    rows.push_back(std::move(row));
    parts.push_back(r.part);
  }

  std::vector<std::size_t> widths(headers.size());
  for (std::size_t i = 0; i < headers.size(); ++i) widths[i] = headers[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());

  auto emit_row = [&](const std::vector<std::string>& row, std::ostringstream& os) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << row[i];
      if (i + 1 < row.size()) os << std::string(widths[i] - row[i].size() + 2, ' ');
    }
    os << '\n';
  };

  std::size_t total = 0;
  for (std::size_t w : widths) total += w + 2;
  std::string rule(total - 2, '-');

  std::ostringstream os;
  emit_row(headers, os);
  os << rule << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && parts[i] != parts[i - 1]) os << rule << '\n';
    emit_row(rows[i], os);
  }
  os << rule << '\n';
  os << "Upper limits on absolute parameter values, Planck units: the p^n\n"
        "coefficient carries (l_P/hbar)^n. Values rounded to 2 significant\n"
        "figures; \"~\" entries are order-of-magnitude only and compared at\n"
        "exponent level. * = estimated sensitivity, not experimental data.\n";
  for (const auto& f : flags) os << "FLAG " << f << '\n';
  return os.str();
}

}  // namespace igup
