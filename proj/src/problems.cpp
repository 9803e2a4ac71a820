#include "lscm/problems.hpp"

#include <cmath>
#include <stdexcept>

#include "lscm/quadrature.hpp"

namespace lscm {

namespace {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Closes q over A, B and the exact solution so q(t) = A (Dx*)' + B x*.
void manufacture(DAEProblem& p) {
  auto A = p.A;
  auto B = p.B;
  auto x = p.x_exact;
  auto dx = p.Dx_exact_derivative;
  p.q = [A, B, x, dx](double t) -> Vec { return A(t) * dx(t) + B(t) * x(t); };
}

}  // namespace

BenchmarkProblem example_index3(double eta) {
  DAEProblem p;
  p.a = 0.0;
  p.b = 1.0;
  p.m = 3;
  p.k = 2;
  p.l_dyn = 0;
  p.index = 3;
  p.A = [eta](double t) -> Mat {
    Mat A(3, 2);
    A << 1, 0, t * eta, 1, 0, 0;
    return A;
  };
  p.B = [eta](double t) -> Mat {
    Mat B(3, 3);
    B << 0, 0, 1, eta + 1, 0, 0, t * eta, 1, 0;
    return B;
  };
  p.x_exact = [](double t) -> Vec {
    Vec x(3);
    x << std::exp(-2 * t) * std::sin(t), std::exp(-t) * std::cos(t), std::exp(-t) * std::sin(t);
    return x;
  };
  p.Dx_exact_derivative = [](double t) -> Vec {
    Vec d(2);
    d << std::exp(-2 * t) * (std::cos(t) - 2 * std::sin(t)), -std::exp(-t) * (std::sin(t) + std::cos(t));
    return d;
  };
  p.Ga = Mat(0, 3);
  p.Gb = Mat(0, 3);
  p.d = Vec(0);
  manufacture(p);
  return {"index3", p, {{"eta", eta}}};
}

BenchmarkProblem example_hessenberg2(double eta, double lambda) {
  DAEProblem p;
  p.a = 0.0;
  p.b = 1.0;
  p.m = 3;
  p.k = 2;
  p.l_dyn = 1;
  p.index = 2;
  p.A = [](double) -> Mat {
    Mat A(3, 2);
    A << 1, 0, 0, 1, 0, 0;
    return A;
  };
  p.B = [eta, lambda](double t) -> Mat {
    Mat B(3, 3);
    B << lambda, -1, -1, eta * t * (1 - eta * t) - eta, lambda, -eta * t, 1 - eta * t, 1, 0;
    return B;
  };
  p.x_exact = [](double t) -> Vec {
    Vec x(3);
    x << std::exp(-t) * std::sin(t), std::exp(-2 * t) * std::sin(t), std::exp(-t) * std::cos(t);
    return x;
  };
  p.Dx_exact_derivative = [](double t) -> Vec {
    Vec d(2);
    d << std::exp(-t) * (std::cos(t) - std::sin(t)), std::exp(-2 * t) * (std::cos(t) - 2 * std::sin(t));
    return d;
  };
  p.Ga = Mat::Zero(1, 3);
  p.Ga(0, 0) = 1.0;
  p.Gb = Mat::Zero(1, 3);
  p.d = p.Ga * p.x_exact(0.0);
  manufacture(p);
  return {"hessenberg2", p, {{"eta", eta}, {"lambda", lambda}}};
}

BenchmarkProblem example_campbell_moore(double rho) {
  if (rho == 0.0) throw std::invalid_argument("campbell-moore example requires rho != 0");
  DAEProblem p;
  p.a = 0.0;
  p.b = 5.0;
  p.m = 7;
  p.k = 6;
  p.l_dyn = 4;
  p.index = 3;
  p.A = [](double) -> Mat {
    Mat A = Mat::Zero(7, 6);
    A.topRows(6).setIdentity();
    return A;
  };
  p.B = [rho](double t) -> Mat {
    const double s = std::sin(t), c = std::cos(t);
    Mat B = Mat::Zero(7, 7);
    B(0, 3) = -1;
    B(1, 4) = -1;
    B(2, 5) = -1;
    B(3, 2) = s;
    B(3, 4) = 1;
    B(3, 5) = -c;
    B(3, 6) = -2 * rho * c * c;
    B(4, 2) = -c;
    B(4, 3) = -1;
    B(4, 5) = -s;
    B(4, 6) = -2 * rho * s * c;
    B(5, 2) = 1;
    B(5, 6) = 2 * rho * s;
    B(6, 0) = 2 * rho * c * c;
    B(6, 1) = 2 * rho * s * c;
    B(6, 2) = -2 * rho * s;
    return B;
  };
  p.x_exact = [rho](double t) -> Vec {
    const double s = std::sin(t), c = std::cos(t);
    Vec x(7);
    x << s, c, 2 * c * c, c, -s, -2 * std::sin(2 * t), -s / rho;
    return x;
  };
  p.Dx_exact_derivative = [](double t) -> Vec {
    const double s = std::sin(t), c = std::cos(t);
    Vec d(6);
    d << c, -s, -2 * std::sin(2 * t), -s, -c, -4 * std::cos(2 * t);
    return d;
  };
  p.Ga = Mat::Zero(4, 7);
  const int sel[4] = {1, 2, 4, 5};
  for (int r = 0; r < 4; ++r) p.Ga(r, sel[r]) = 1.0;
  p.Gb = Mat::Zero(4, 7);
  p.d = p.Ga * p.x_exact(0.0);
  manufacture(p);
  return {"campbell-moore", p, {{"rho", rho}}};
}

BenchmarkProblem make_benchmark(const std::string& name, const std::map<std::string, double>& params) {
  auto get = [&](const char* key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  if (name == "index3") return example_index3(get("eta", 0.0));
  if (name == "hessenberg2") return example_hessenberg2(get("eta", -25.0), get("lambda", -1.0));
  if (name == "campbell-moore") return example_campbell_moore(get("rho", 5.0));
  throw std::invalid_argument("unknown problem '" + name + "' (expected index3, hessenberg2, campbell-moore)");
}

double error_H1D(const CoefficientVector& c, const DAEProblem& problem, const Partition& partition,
                 const BasisFamily& family) {
  if (!problem.x_exact || !problem.Dx_exact_derivative)
    throw std::invalid_argument("error_H1D: problem has no exact solution");
  auto rule = gauss_legendre(family.N() + 3);
  double s = 0.0;
  for (int j = 0; j < partition.n(); ++j) {
    const double h = partition.step(j), t0 = partition.breakpoint(j);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double tau = rule.nodes[i], t = t0 + tau * h;
      Vec ex = evaluate_on_interval(c, partition, family, j, tau) - problem.x_exact(t);
      Vec ed = evaluate_Dx_on_interval(c, partition, family, j, tau) - problem.Dx_exact_derivative(t);
      s += h * rule.weights[i] * (ex.squaredNorm() + ed.squaredNorm());
    }
  }
  return std::sqrt(s);
}

}  // namespace lscm
