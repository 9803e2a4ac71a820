#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "lscm/assembly.hpp"
#include "lscm/quadrature.hpp"

namespace lscm {

enum class ExperimentKind {
  repmap_conditioning,
  constraint_conditioning,
  system_conditioning,
  solve,
  convergence,
  projection_test
};

ExperimentKind parse_experiment(const std::string& s);
std::string to_string(ExperimentKind kind);

enum class OutputFormat { csv, md };

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::repmap_conditioning;
  std::vector<std::string> bases{"L", "mL", "Ch", "RK"};
  std::vector<int> N{3};
  std::vector<int> n{10, 20, 40, 80};
  /// Collocation rule: M = N + M_extra points of the given family.
  int M_extra = 1;
  NodeFamily nodes = NodeFamily::gauss_legendre;
  std::vector<WeightVariant> variants{WeightVariant::restriction};
  std::string problem = "index3";
  std::map<std::string, double> parameters;
  BoundaryWeight boundary_weight = BoundaryWeight::unit;
  /// Layout for the representation-map and constraint experiments.
  int m = 2;
  int k = 1;
  /// Subset of the experiment's quantities; empty selects the defaults.
  std::vector<std::string> quantities;
  std::string out;
  OutputFormat format = OutputFormat::csv;

  /// Throws std::invalid_argument on out-of-range entries.
  void validate() const;
};

/// Parses "key = value" lines ('#' starts a comment). List values are comma
/// separated. Unknown keys are rejected.
ExperimentConfig parse_config_text(const std::string& text, ExperimentConfig base = {});
/// Applies one key/value pair using the same keys as the config file.
void apply_config_entry(ExperimentConfig& config, const std::string& key, const std::string& value);

/// One output table: rows are n, columns are bases.
struct ResultTable {
  std::string experiment;
  std::string quantity;
  int N = 0;
  std::string variant;  // "-" when not applicable
  std::vector<int> n;
  std::vector<std::string> columns;
  Eigen::MatrixXd values;
  std::vector<std::string> notes;
};

struct ExperimentResult {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<ResultTable> tables;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

/// Three significant digits, exponent without padding: 5.77e+4.
std::string format_sci3(double v);
std::string to_csv(const ExperimentResult& result, const ResultTable& table);
std::string to_markdown(const ExperimentResult& result);
/// Suggested file name for a table: <experiment>_<quantity>_N<N>[_<variant>].csv
std::string table_file_name(const ResultTable& table);

/// Least-squares slope of log(err) against log(1/n), i.e. the observed order.
double fitted_order(const std::vector<int>& n, const std::vector<double>& err);

}  // namespace lscm
