// Command-line surface for the iGUP toolkit: series expansion of the
// deformed commutators, parameter-family conversions, 1D<->3D extension,
// minimal-uncertainty estimates, and the experimental-bounds table.
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"

#include "igup/bounds.hpp"
#include "igup/convert.hpp"
#include "igup/model.hpp"
#include "igup/uncertainty.hpp"

using namespace igup;

namespace {

std::map<std::string, double> parse_bindings(const std::vector<std::string>& raw) {
  std::map<std::string, double> out;
  for (const auto& item : raw) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw error("expected name=value, got '" + item + "'");
    out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  return out;
}

SymbolTablePtr parse_symbols(const std::vector<std::string>& raw) {
  std::vector<ParamSymbol> syms;
  for (const auto& item : raw) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw error("expected name=weight, got '" + item + "'");
    syms.push_back({item.substr(0, eq), std::stoi(item.substr(eq + 1))});
  }
  return make_table(std::move(syms));
}

// Either a catalog model or an inline generator series.
struct Input {
  std::string model;
  std::string series;
  std::vector<std::string> symbols;
  int order = 4;

  void attach(CLI::App* cmd) {
    cmd->add_option("--model", model, "catalog model name");
    cmd->add_option("--series", series, "inline 1D generator F, e.g. \"1 + beta*p^2\"");
    cmd->add_option("--symbol", symbols,
                    "symbol declaration name=weight for inline series (repeatable)");
    cmd->add_option("--order", order, "truncation order")->check(CLI::PositiveNumber);
  }

  bool is_inline() const {
    if (!series.empty() && !model.empty()) throw error("give either --model or --series, not both");
    if (series.empty() && model.empty()) throw error("one of --model or --series is required");
    return !series.empty();
  }

  ModelSpec load() const { return instantiate(model, order); }
  MomentumSeries inline_generator() const {
    return parse_series(series, parse_symbols(symbols), order);
  }
};

void print_series(const std::string& label, const MomentumSeries& s, bool json) {
  if (json)
    std::cout << "{\"" << label << "\": " << to_json(s) << "}\n";
  else
    std::cout << label << ": " << to_string(s) << "\n";
}

int cmd_catalog() {
  for (const auto& name : catalog_names()) {
    ModelSpec m = instantiate(name, 1);
    std::printf("%-22s %s\n", name.c_str(), m.description.c_str());
  }
  return 0;
}

int cmd_expand(const Input& in, bool json) {
  if (in.is_inline()) {
    // An inline generator names a 1D commutator; expand its unique
    // commutative 3D extension.
    MomentumSeries F = in.inline_generator();
    CommutativeExtension e = extend_1d_commutative(F, in.order);
    XPCommutator c = xp_commutative(e.alphas, in.order, F.table());
    print_series("delta", c.delta_part, json);
    print_series("pp", c.tensor_part, json);
    print_series("xx", MomentumSeries::constant(F.table(), 0, in.order), json);
    return 0;
  }
  ModelSpec m = in.load();
  XPCommutator c = m.commutator();
  print_series("delta", c.delta_part, json);
  print_series("pp", c.tensor_part, json);
  if (m.representation == Representation::AB) {
    XXCommutator xx = xx_noncommutative(m.a, m.b, in.order, m.params);
    print_series("xx", xx.coeff, json);
  } else {
    print_series("xx", MomentumSeries::constant(m.params, 0, in.order), json);
  }
  return 0;
}

int cmd_convert(const Input& in, bool json) {
  ModelSpec m = in.load();
  CoeffSeq alphas;
  switch (m.representation) {
    case Representation::Alpha: alphas = m.alphas; break;
    case Representation::AB: {
      CommutativityResult comm = commutativity_check(m.a, m.b, in.order, m.params);
      if (!comm.commutative)
        throw error("model '" + m.name + "' is noncommutative: no alpha family exists");
      alphas = a_to_alpha(m.a, in.order, m.params);
      break;
    }
    case Representation::Gen1D:
      alphas = extend_1d_commutative(*m.F, in.order).alphas;
      break;
  }
  CoeffSeq a = alpha_to_a(alphas, in.order, m.params);
  CoeffSeq b = alpha_to_b(alphas, in.order, m.params);
  if (json) {
    nlohmann::json out;
    for (int n = 1; n <= in.order; ++n) {
      out["alpha"][std::to_string(n)] = to_string(alphas.at(n), *m.params);
      out["a"][std::to_string(n)] = to_string(a.at(n), *m.params);
    }
    for (int n = -1; n <= in.order - 2; ++n)
      out["b"][std::to_string(n)] = to_string(b.at(n), *m.params);
    std::cout << out.dump() << "\n";
    return 0;
  }
  for (int n = 1; n <= in.order; ++n)
    std::cout << "alpha_" << n << " = " << to_string(alphas.at(n), *m.params) << "\n";
  for (int n = 1; n <= in.order; ++n)
    std::cout << "a_" << n << " = " << to_string(a.at(n), *m.params) << "\n";
  for (int n = -1; n <= in.order - 2; ++n)
    std::cout << "b_" << n << " = " << to_string(b.at(n), *m.params) << "\n";
  return 0;
}

int cmd_extend(const Input& in, bool commutative, bool json) {
  MomentumSeries F = in.is_inline() ? in.inline_generator() : in.load().generator_1d();
  if (!commutative)
    throw error("only the commutative extension is determined by F alone; pass --commutative");
  CommutativeExtension ext = extend_1d_commutative(F, in.order);
  const SymbolTable& table = *F.table();
  if (json) {
    nlohmann::json out;
    for (int n = 1; n <= in.order; ++n)
      out["alpha"][std::to_string(n)] = to_string(ext.alphas.at(n), table);
    out["f"] = nlohmann::json::parse(to_json(ext.f));
    std::cout << out.dump() << "\n";
    return 0;
  }
  for (int n = 1; n <= in.order; ++n)
    std::cout << "alpha_" << n << " = " << to_string(ext.alphas.at(n), table) << "\n";
  std::cout << "f = " << to_string(ext.f) << "\n";
  return 0;
}

int cmd_check_comm(const Input& in, bool json) {
  CommutativityResult r;
  SymbolTablePtr table;
  if (in.is_inline()) {
    // An inline generator only fixes F; its commutative extension is
    // commutative by construction, so report that directly.
    MomentumSeries F = in.inline_generator();
    CommutativeExtension ext = extend_1d_commutative(F, in.order);
    CoeffSeq a = alpha_to_a(ext.alphas, in.order, F.table());
    CoeffSeq b = alpha_to_b(ext.alphas, in.order, F.table());
    r = commutativity_check(a, b, in.order, F.table());
    table = F.table();
  } else {
    ModelSpec m = in.load();
    table = m.params;
    if (m.representation == Representation::AB) {
      r = commutativity_check(m.a, m.b, in.order, m.params);
    } else {
      XPCommutator c = m.commutator();
      MomentumSeries F = reduce_1d(c);
      CoeffSeq a, b;
      a.first = 1;
      for (int n = 1; n <= in.order; ++n) a.entries.push_back(c.delta_part.coeff(n));
      b.first = -1;
      for (int n = -1; n <= in.order - 2; ++n) b.entries.push_back(c.tensor_part.coeff(n + 2));
      r = commutativity_check(a, b, in.order, m.params);
    }
  }
  if (json) {
    nlohmann::json out = {{"commutative", r.commutative}, {"order", in.order}};
    if (!r.commutative) {
      out["witness_power"] = *r.witness_power;
      out["witness"] = to_string(r.witness, *table);
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  if (r.commutative) {
    std::cout << "commutative through order " << in.order << "\n";
    return 0;
  }
  std::cout << "noncommutative: [x_i,x_j] coefficient at p^" << *r.witness_power << " is "
            << to_string(r.witness, *table) << "\n";
  return 0;
}

int cmd_table1(int max_order) {
  // c_{P-n}^(n) over generic alpha_1..alpha_P, rows P = 0..max_order.
  for (int P = 0; P <= max_order; ++P) {
    for (int n = 0; n <= P; ++n) {
      auto [c, table] = table_coefficient_generic(P, n);
      std::printf("c_%d^(%d) = %s\n", P - n, n, to_string(c, *table).c_str());
    }
  }
  return 0;
}

int cmd_min_uncertainty(const Input& in, const std::vector<std::string>& params,
                        const std::string& method, bool isotropic3d, double hbar, bool json) {
  auto values = parse_bindings(params);
  nlohmann::json results = nlohmann::json::array();

  auto report = [&](const UncertaintyResult& r) {
    if (json) {
      nlohmann::json row = {{"method", r.method},
                            {"bounded_below", r.bounded_below},
                            {"dx_min", r.delta_x_min},
                            {"diagnostics", r.diagnostics}};
      if (r.bounded_below) {
        row["dp_at_min"] = r.delta_p_at_min;
        row["error_estimate"] = r.error_estimate;
      }
      results.push_back(std::move(row));
      return;
    }
    std::printf("method: %s\n", r.method.c_str());
    if (!r.bounded_below)
      std::printf("dx_min: unbounded below (infimum %.12g)\n", r.delta_x_min);
    else
      std::printf("dx_min: %.12g\ndp_at_min: %.12g\nerror_estimate: %.3g\n", r.delta_x_min,
                  r.delta_p_at_min, r.error_estimate);
    std::printf("diagnostics: %s\n", r.diagnostics.c_str());
  };

  if (isotropic3d) {
    if (in.model != "Kempf") throw error("--isotropic-3d applies to the Kempf model only");
    report(kempf_isotropic_min(values.at("beta"), values.at("betap"), hbar));
    if (json) std::cout << results.dump() << "\n";
    return 0;
  }

  MomentumSeries F = in.is_inline() ? in.inline_generator() : in.load().generator_1d();
  std::vector<double> coeffs = series_moment_coeffs(F, values);
  // Bracketing scale: the leading deformation coefficient c_k scaled to
  // momentum-squared units.
  double scale = 1;
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) {
      scale = std::pow(std::abs(coeffs[k]), 2.0 / static_cast<double>(k));
      break;
    }

  if (method == "moment-closure" || method == "both")
    report(moment_closure_min(coeffs, scale, hbar));
  if (method == "saturation-scan" || method == "both") {
    GeneratorEvaluator gen;
    if (!in.is_inline()) {
      auto closed = closed_generator(in.model, values);
      gen = closed ? *closed : series_generator(F, values);
    } else {
      gen = series_generator(F, values);
    }
    report(saturation_scan_min(gen, scale, hbar));
  }
  if (json) std::cout << results.dump() << "\n";
  return 0;
}

int cmd_bounds(const std::string& dataset, bool json) {
  std::vector<BoundRecord> records = dataset.empty() ? load_bounds() : load_bounds(dataset);
  if (json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : records) {
      nlohmann::json row = {{"part", r.part},
                            {"source", r.source},
                            {"reference", r.reference},
                            {"convention", r.convention},
                            {"value", r.value},
                            {"magnitude_only", r.magnitude_only}};
      for (const auto& [col, bound] : translate(r)) row["derived"][col] = bound;
      for (const auto& [col, printed] : r.printed) row["printed"][col] = printed;
      out.push_back(std::move(row));
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << render_table(records);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iGUP toolkit: deformed-commutator series algebra and bounds"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "structured output");

  Input expand_in, convert_in, extend_in, check_in, unc_in;
  bool commutative = false;
  int table1_max = 4;
  std::string method = "both";
  bool isotropic3d = false;
  double hbar = 1.0;
  std::vector<std::string> unc_params;
  std::string dataset;

  auto* expand = app.add_subcommand("expand", "expand the deformed commutators of a model");
  expand_in.attach(expand);
  auto* convert = app.add_subcommand("convert", "convert between parameter families");
  convert_in.attach(convert);
  auto* extend = app.add_subcommand("extend", "3D extension of a 1D generator");
  extend_in.attach(extend);
  extend->add_flag("--commutative", commutative, "the unique commutative extension");
  auto* check = app.add_subcommand("check-comm", "position-operator commutativity check");
  check_in.attach(check);
  auto* table1 = app.add_subcommand("table1", "reversion-power coefficients c_{P-n}^(n)");
  table1->add_option("--max-order", table1_max, "largest power P")->check(CLI::PositiveNumber);
  auto* unc = app.add_subcommand("min-uncertainty", "minimal position uncertainty estimate");
  unc_in.attach(unc);
  unc->add_option("--param", unc_params, "parameter binding name=value (repeatable)");
  unc->add_option("--method", method, "moment-closure, saturation-scan, or both")
      ->check(CLI::IsMember({"moment-closure", "saturation-scan", "both"}));
  unc->add_flag("--isotropic-3d", isotropic3d, "Kempf isotropic 3D bound (closed form)");
  unc->add_option("--hbar", hbar, "value of hbar (default 1)");
  auto* bounds = app.add_subcommand("bounds", "experimental-bounds table");
  bounds->add_option("--dataset", dataset, "alternate dataset file");
  auto* catalog = app.add_subcommand("catalog", "list shipped models");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*catalog) return cmd_catalog();
    if (*expand) return cmd_expand(expand_in, json);
    if (*convert) return cmd_convert(convert_in, json);
    if (*extend) return cmd_extend(extend_in, commutative, json);
    if (*check) return cmd_check_comm(check_in, json);
    if (*table1) return cmd_table1(table1_max);
    if (*unc) return cmd_min_uncertainty(unc_in, unc_params, method, isotropic3d, hbar, json);
    if (*bounds) return cmd_bounds(dataset, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
