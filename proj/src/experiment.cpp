#include "lscm/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "lscm/basis.hpp"
#include "lscm/constraint.hpp"
#include "lscm/errors.hpp"
#include "lscm/problems.hpp"
#include "lscm/projection.hpp"
#include "lscm/repmap.hpp"
#include "lscm/solver.hpp"

namespace lscm {

namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("empty list value");
  return out;
}

int to_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

double to_double(const std::string& s) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split_list(s)) out.push_back(to_int(item));
  return out;
}

std::string full_precision(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::vector<std::string> default_quantities(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::repmap_conditioning:
      return {"sigma_min_Uhat", "sigma_min_U", "sigma_max_U", "sigma_max_Uhat", "kappa_U", "kappa_Uhat"};
    case ExperimentKind::constraint_conditioning: return {"kappa_C", "norm_C_pinv_h"};
    case ExperimentKind::system_conditioning: return {"kappa"};
    case ExperimentKind::solve: return {"residual", "error_H1D"};
    case ExperimentKind::convergence: return {"error_H1D"};
    case ExperimentKind::projection_test: return {"jump_before", "jump_after"};
  }
  return {};
}

bool uses_variants(ExperimentKind kind) {
  return kind == ExperimentKind::system_conditioning || kind == ExperimentKind::solve ||
         kind == ExperimentKind::convergence;
}

// Values of every requested quantity for one (basis, N, n, variant) cell.
std::vector<double> compute_cell(const ExperimentConfig& cfg, const std::vector<std::string>& quantities,
                                 const BasisFamily& family, int n, WeightVariant variant) {
  std::vector<double> out;
  switch (cfg.kind) {
    case ExperimentKind::repmap_conditioning: {
      auto r = rep_map_conditioning(make_uniform_partition(0.0, 1.0, n), family, cfg.m, cfg.k);
      for (const auto& q : quantities) {
        if (q == "sigma_min_Uhat") out.push_back(r.sigma_min_Uhat);
        else if (q == "sigma_min_U") out.push_back(r.sigma_min_U);
        else if (q == "sigma_max_U") out.push_back(r.sigma_max_U);
        else if (q == "sigma_max_Uhat") out.push_back(r.sigma_max_Uhat);
        else if (q == "kappa_U") out.push_back(r.kappa_U());
        else if (q == "kappa_Uhat") out.push_back(r.kappa_Uhat());
      }
      return out;
    }
    case ExperimentKind::constraint_conditioning: {
      auto part = make_uniform_partition(0.0, 1.0, n);
      auto r = constraint_conditioning(build_C(part, family, cfg.m, cfg.k));
      for (const auto& q : quantities) {
        if (q == "kappa_C") out.push_back(r.kappa);
        else if (q == "norm_C_pinv_h") out.push_back(r.norm_C_pinv * part.max_step());
        else if (q == "norm_C") out.push_back(r.norm_C);
      }
      return out;
    }
    case ExperimentKind::system_conditioning:
    case ExperimentKind::solve:
    case ExperimentKind::convergence: {
      auto bench = make_benchmark(cfg.problem, cfg.parameters);
      auto part = make_uniform_partition(bench.problem.a, bench.problem.b, n);
      auto rho = collocation_nodes(family.N() + cfg.M_extra, cfg.nodes);
      auto sys = assemble(bench.problem, part, family, rho, variant, {cfg.boundary_weight});
      if (cfg.kind == ExperimentKind::system_conditioning) return {kappa_C_of_A(sys)};
      auto res = solve(sys);
      for (const auto& q : quantities) {
        if (q == "residual") out.push_back(res.residual_norm);
        else if (q == "error_H1D") out.push_back(error_H1D(res.c, bench.problem, part, family));
        else if (q == "kappa") out.push_back(res.kappa);
      }
      return out;
    }
    case ExperimentKind::projection_test: {
      auto part = make_uniform_partition(0.0, 1.0, n);
      Layout layout(n, cfg.m, cfg.k, family.N());
      // Alternating step function: 0 on even, 1 on odd intervals, in every
      // component; only the constant coefficient (pbar_0 scaled by h) is set.
      CoefficientVector c(layout);
      for (int j = 0; j < n; ++j) {
        double level = j % 2;
        for (int kappa = 0; kappa < layout.k; ++kappa) c.component(j, kappa)(0) = level / part.step(j);
      }
      ProjectionContext ctx(part, family, cfg.m, cfg.k);
      for (const auto& q : quantities) {
        if (q == "jump_before") out.push_back(max_jump(c, part, family));
        else if (q == "jump_after") out.push_back(max_jump(project_coefficients(c, ctx), part, family));
      }
      return out;
    }
  }
  return out;
}

}  // namespace

ExperimentKind parse_experiment(const std::string& s) {
  for (auto k : {ExperimentKind::repmap_conditioning, ExperimentKind::constraint_conditioning,
                 ExperimentKind::system_conditioning, ExperimentKind::solve, ExperimentKind::convergence,
                 ExperimentKind::projection_test})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown experiment '" + s + "'");
}

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::repmap_conditioning: return "repmap-conditioning";
    case ExperimentKind::constraint_conditioning: return "constraint-conditioning";
    case ExperimentKind::system_conditioning: return "system-conditioning";
    case ExperimentKind::solve: return "solve";
    case ExperimentKind::convergence: return "convergence";
    case ExperimentKind::projection_test: return "projection-test";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (bases.empty() || N.empty() || n.empty() || variants.empty())
    throw std::invalid_argument("config needs at least one basis, N, n and variant");
  for (const auto& b : bases) make_basis(b, 1);
  for (int v : N)
    if (v < 1 || v > 30) throw std::invalid_argument("N must lie in 1..30");
  for (int v : n)
    if (v < 1) throw std::invalid_argument("n must be positive");
  if (M_extra < 1) throw std::invalid_argument("M_extra must be at least 1 (M >= N + 1)");
  if (!(0 < k && k < m)) throw std::invalid_argument("need 0 < k < m");
  auto allowed = default_quantities(kind);
  if (kind == ExperimentKind::constraint_conditioning) allowed.push_back("norm_C");
  if (kind == ExperimentKind::solve) allowed.push_back("kappa");
  for (const auto& q : quantities)
    if (std::find(allowed.begin(), allowed.end(), q) == allowed.end())
      throw std::invalid_argument("quantity '" + q + "' not available for " + to_string(kind));
  if (kind == ExperimentKind::constraint_conditioning)
    for (int v : n)
      if (v < 2) throw std::invalid_argument("constraint conditioning needs n >= 2");
  if (uses_variants(kind)) make_benchmark(problem, parameters);
}

void apply_config_entry(ExperimentConfig& c, const std::string& key_raw, const std::string& value_raw) {
  const std::string key = trim(key_raw), value = trim(value_raw);
  if (key == "experiment") c.kind = parse_experiment(value);
  else if (key == "basis" || key == "bases") c.bases = split_list(value);
  else if (key == "N") c.N = int_list(value);
  else if (key == "n") c.n = int_list(value);
  else if (key == "M_extra") c.M_extra = to_int(value);
  else if (key == "nodes") {
    if (value == "gauss") c.nodes = NodeFamily::gauss_legendre;
    else if (value == "uniform") c.nodes = NodeFamily::uniform;
    else throw std::invalid_argument("nodes must be gauss or uniform");
  } else if (key == "variant" || key == "variants") {
    c.variants.clear();
    for (const auto& v : split_list(value)) c.variants.push_back(parse_weight_variant(v));
  } else if (key == "problem") c.problem = value;
  else if (key == "eta" || key == "lambda" || key == "rho") c.parameters[key] = to_double(value);
  else if (key == "boundary_weight") {
    if (value == "unit") c.boundary_weight = BoundaryWeight::unit;
    else if (value == "step_root") c.boundary_weight = BoundaryWeight::step_root;
    else throw std::invalid_argument("boundary_weight must be unit or step_root");
  } else if (key == "m") c.m = to_int(value);
  else if (key == "k") c.k = to_int(value);
  else if (key == "quantity" || key == "quantities") c.quantities = split_list(value);
  else if (key == "out") c.out = value;
  else if (key == "format") {
    if (value == "csv") c.format = OutputFormat::csv;
    else if (value == "md") c.format = OutputFormat::md;
    else throw std::invalid_argument("format must be csv or md");
  } else throw std::invalid_argument("unknown config key '" + key + "'");
}

ExperimentConfig parse_config_text(const std::string& text, ExperimentConfig base) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    try {
      apply_config_entry(base, line.substr(0, eq), line.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return base;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult result;
  auto& md = result.metadata;
  md.emplace_back("experiment", to_string(cfg.kind));
  md.emplace_back("bases", join(cfg.bases, ","));
  {
    std::vector<std::string> s;
    for (int v : cfg.N) s.push_back(std::to_string(v));
    md.emplace_back("N", join(s, ","));
    s.clear();
    for (int v : cfg.n) s.push_back(std::to_string(v));
    md.emplace_back("n", join(s, ","));
  }
  if (uses_variants(cfg.kind)) {
    auto bench = make_benchmark(cfg.problem, cfg.parameters);
    md.emplace_back("problem", bench.name);
    for (const auto& [key, value] : bench.parameters) md.emplace_back(key, full_precision(value));
    md.emplace_back("M", "N+" + std::to_string(cfg.M_extra));
    md.emplace_back("nodes", cfg.nodes == NodeFamily::gauss_legendre ? "gauss" : "uniform");
    md.emplace_back("boundary_weight", cfg.boundary_weight == BoundaryWeight::unit ? "unit" : "step_root");
  } else {
    md.emplace_back("m", std::to_string(cfg.m));
    md.emplace_back("k", std::to_string(cfg.k));
  }

  const auto quantities = cfg.quantities.empty() ? default_quantities(cfg.kind) : cfg.quantities;
  std::vector<WeightVariant> variants =
      uses_variants(cfg.kind) ? cfg.variants : std::vector<WeightVariant>{WeightVariant::restriction};
  const std::size_t nq = cfg.kind == ExperimentKind::system_conditioning ? 1 : quantities.size();

  for (WeightVariant variant : variants) {
    for (int N : cfg.N) {
      std::vector<ResultTable> tables(nq);
      for (std::size_t q = 0; q < nq; ++q) {
        auto& t = tables[q];
        t.experiment = to_string(cfg.kind);
        t.quantity = cfg.kind == ExperimentKind::system_conditioning ? "kappa" : quantities[q];
        t.N = N;
        t.variant = uses_variants(cfg.kind) ? to_string(variant) : "-";
        t.n = cfg.n;
        t.columns = cfg.bases;
        t.values = Eigen::MatrixXd::Constant(cfg.n.size(), cfg.bases.size(), kNaN);
      }
      for (std::size_t b = 0; b < cfg.bases.size(); ++b) {
        BasisFamily family = make_basis(cfg.bases[b], N);
        for (std::size_t i = 0; i < cfg.n.size(); ++i) {
          try {
            auto vals = compute_cell(cfg, quantities, family, cfg.n[i], variant);
            for (std::size_t q = 0; q < nq && q < vals.size(); ++q) tables[q].values(i, b) = vals[q];
          } catch (const std::exception& e) {
            for (auto& t : tables)
              t.notes.push_back("cell " + cfg.bases[b] + " n=" + std::to_string(cfg.n[i]) + ": " + e.what());
          }
        }
      }
      if (cfg.kind == ExperimentKind::convergence) {
        for (auto& t : tables)
          for (std::size_t b = 0; b < t.columns.size(); ++b) {
            std::vector<double> err(t.values.rows());
            for (Eigen::Index i = 0; i < t.values.rows(); ++i) err[i] = t.values(i, b);
            t.notes.push_back("fitted order " + t.columns[b] + " = " + full_precision(fitted_order(t.n, err)));
          }
      }
      for (auto& t : tables) result.tables.push_back(std::move(t));
    }
  }
  return result;
}

std::string format_sci3(double v) {
  if (std::isnan(v)) return "-";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  std::string s(buf);
  auto e = s.find('e');
  std::string mant = s.substr(0, e);
  char sign = s[e + 1];
  std::string digits = s.substr(e + 2);
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  return mant + "e" + sign + digits;
}

std::string table_file_name(const ResultTable& t) {
  std::string name = t.experiment + "_" + t.quantity + "_N" + std::to_string(t.N);
  if (t.variant != "-") name += "_" + t.variant;
  return name + ".csv";
}

std::string to_csv(const ExperimentResult& result, const ResultTable& t) {
  std::string s;
  for (const auto& [key, value] : result.metadata) s += "# " + key + "=" + value + "\n";
  s += "# quantity=" + t.quantity + "\n# table_N=" + std::to_string(t.N) + "\n";
  if (t.variant != "-") s += "# variant=" + t.variant + "\n";
  for (const auto& note : t.notes) s += "# note: " + note + "\n";
  s += "n," + join(t.columns, ",") + "\n";
  for (std::size_t i = 0; i < t.n.size(); ++i) {
    s += std::to_string(t.n[i]);
    for (Eigen::Index b = 0; b < t.values.cols(); ++b) s += "," + full_precision(t.values(i, b));
    s += "\n";
  }
  return s;
}

std::string to_markdown(const ExperimentResult& result) {
  std::string s;
  for (const auto& [key, value] : result.metadata) s += "<!-- " + key + "=" + value + " -->\n";
  for (const auto& t : result.tables) {
    s += "\n### " + t.quantity + ", N = " + std::to_string(t.N);
    if (t.variant != "-") s += ", variant " + t.variant;
    s += "\n\n| n | " + join(t.columns, " | ") + " |\n|---|";
    for (std::size_t b = 0; b < t.columns.size(); ++b) s += "---|";
    s += "\n";
    for (std::size_t i = 0; i < t.n.size(); ++i) {
      s += "| " + std::to_string(t.n[i]) + " |";
      for (Eigen::Index b = 0; b < t.values.cols(); ++b) s += " " + format_sci3(t.values(i, b)) + " |";
      s += "\n";
    }
    for (const auto& note : t.notes) s += "\n" + note + "\n";
  }
  return s;
}

double fitted_order(const std::vector<int>& n, const std::vector<double>& err) {
  if (n.size() != err.size() || n.size() < 2) return kNaN;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    double x = std::log(1.0 / n[i]), y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace lscm
