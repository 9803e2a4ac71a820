// Experiment runner: sweeps bases, degrees and grids and writes CSV or
// markdown tables.
//
//   lscm --experiment system-conditioning --problem index3 --eta -2 \
//        --basis L,mL,Ch,RK --N 3 --n 10,20,40,80 --variant R,C --format md
//
// Exit codes: 0 success, 2 configuration error, 3 numeric failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lscm/errors.hpp"
#include "lscm/experiment.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kNumericError = 3;

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Least-squares collocation experiments for linear boundary-value DAEs"};
  std::string config_file;
  std::vector<std::pair<std::string, std::string>> overrides;
  auto add = [&](const char* flag, const char* key, const char* help) {
    app.add_option_function<std::string>(flag, [&overrides, key](const std::string& v) {
      overrides.emplace_back(key, v);
    }, help);
  };
  app.add_option("--config", config_file, "key = value config file (flags override it)")->check(CLI::ExistingFile);
  add("--experiment", "experiment",
      "repmap-conditioning | constraint-conditioning | system-conditioning | solve | convergence | projection-test");
  add("--basis", "basis", "comma list of L, mL, Ch, RK, RKg, RKu");
  add("--N", "N", "comma list of polynomial degrees");
  add("--n", "n", "comma list of subinterval counts");
  add("--variant", "variant", "comma list of functional variants C, I, R");
  add("--problem", "problem", "index3 | hessenberg2 | campbell-moore");
  add("--eta", "eta", "problem parameter eta");
  add("--lambda", "lambda", "problem parameter lambda");
  add("--rho", "rho", "problem parameter rho");
  add("--M-extra", "M_extra", "collocation points per interval minus N (default 1)");
  add("--nodes", "nodes", "collocation node family: gauss | uniform");
  add("--boundary-weight", "boundary_weight", "unit | step_root");
  add("--m", "m", "system size for representation-map experiments");
  add("--k", "k", "differential components for representation-map experiments");
  add("--quantity", "quantity", "comma list restricting the reported quantities");
  add("--out", "out", "output directory (stdout when omitted)");
  add("--format", "format", "csv | md");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  lscm::ExperimentConfig config;
  try {
    if (!config_file.empty()) {
      std::ifstream is(config_file);
      std::stringstream ss;
      ss << is.rdbuf();
      config = lscm::parse_config_text(ss.str());
    }
    for (const auto& [key, value] : overrides) lscm::apply_config_entry(config, key, value);
    config.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    lscm::ExperimentResult result = lscm::run_experiment(config);
    for (const auto& t : result.tables)
      for (const auto& note : t.notes) std::cerr << "warning: " << note << "\n";
    if (config.out.empty()) {
      if (config.format == lscm::OutputFormat::md) {
        std::cout << lscm::to_markdown(result);
      } else {
        for (const auto& t : result.tables) std::cout << lscm::to_csv(result, t) << "\n";
      }
      return 0;
    }
    std::filesystem::path dir(config.out);
    std::filesystem::create_directories(dir);
    if (config.format == lscm::OutputFormat::md) {
      write_file(dir / (lscm::to_string(config.kind) + ".md"), lscm::to_markdown(result));
    } else {
      for (const auto& t : result.tables) write_file(dir / lscm::table_file_name(t), lscm::to_csv(result, t));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumericError;
  }
  return 0;
}
