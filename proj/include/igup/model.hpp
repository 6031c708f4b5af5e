#ifndef IGUP_MODEL_HPP
#define IGUP_MODEL_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "igup/commutator.hpp"
#include "igup/series.hpp"

namespace igup {

enum class Representation { AB, Alpha, Gen1D };

// Documented minimal-uncertainty claim: dx_min = coefficient * hbar *
// product(param^exponent).
struct Claim {
  double coefficient = 1.0;
  std::vector<std::pair<std::string, double>> exponents;

  double evaluate(const std::map<std::string, double>& values, double hbar) const;
};

struct ModelSpec {
  std::string name;
  std::string description;
  SymbolTablePtr params;
  Representation representation = Representation::AB;
  int order = 0;       // materialized truncation order
  int max_order = 0;   // highest order the catalog entry is valid to

  CoeffSeq a;                        // AB
  CoeffSeq b;                        // AB
  CoeffSeq alphas;                   // Alpha
  std::optional<MomentumSeries> F;   // Gen1D

  std::vector<std::string> closed_forms;
  std::optional<Claim> claim;

  // The xp commutator in whichever representation the model declares.
  XPCommutator commutator() const;
  // 1D generator F (the model's own F for Gen1D, a+b reduction otherwise).
  MomentumSeries generator_1d() const;
};

// Directory holding the shipped catalog (and bounds dataset).
std::string default_data_dir();

std::vector<std::string> catalog_names(const std::string& data_dir = default_data_dir());

ModelSpec instantiate(const std::string& name, int order,
                      const std::string& data_dir = default_data_dir());

// Parse one declarative model file.
ModelSpec parse_model_file(const std::string& path, int order);

// Closed-form float evaluator of the 1D generator F(|p|) for the named
// catalog model, with its open-domain momentum bound (infinity if none).
struct GeneratorEvaluator {
  std::function<double(double)> F;
  // Antiderivative of p/F(p) with G(0) = 0, when known in closed form.
  std::function<double(double)> G;
  double pmax = 0;  // open upper bound of |p|; inf when unbounded
};
std::optional<GeneratorEvaluator> closed_generator(const std::string& name,
                                                   const std::map<std::string, double>& values);

// Float evaluator from the truncated series (fallback when no closed form).
GeneratorEvaluator series_generator(const MomentumSeries& F,
                                    const std::map<std::string, double>& values);

struct RegressionItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Assert every printed identity the catalog entry is responsible for.
std::vector<RegressionItem> regression_suite(const ModelSpec& model);

// Invert rho(p) = p - beta p^3/3 on [0, 1/sqrt(beta)] via the
// trigonometric solution of the depressed cubic (monotone branch).
double pedram_p_of_rho(double rho, double beta);

}  // namespace igup

#endif
