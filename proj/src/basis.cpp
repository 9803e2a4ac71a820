#include "lscm/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lscm/polynomial.hpp"
#include "lscm/quadrature.hpp"

namespace lscm {

namespace {

constexpr double kTauSlack = 1e-12;

void check_tau(double tau) {
  if (!(tau >= -kTauSlack && tau <= 1.0 + kTauSlack))
    throw std::out_of_range("basis evaluation point outside [0, 1]");
}

double clamp01(double tau) { return std::clamp(tau, 0.0, 1.0); }

double lagrange(const std::vector<double>& t, int i, double tau) {
  double v = 1.0;
  for (std::size_t k = 0; k < t.size(); ++k)
    if (static_cast<int>(k) != i) v *= (tau - t[k]) / (t[i] - t[k]);
  return v;
}

}  // namespace

std::vector<double> chebyshev_interp_nodes(int N) {
  if (N < 1) throw std::invalid_argument("chebyshev_interp_nodes: N must be positive");
  std::vector<double> t(N);
  for (int k = 1; k <= N; ++k)
    t[k - 1] = 0.5 * (1.0 + std::cos((2.0 * k - 1.0) / (2.0 * N) * std::numbers::pi));
  std::sort(t.begin(), t.end());
  if (N % 2 == 1) t[N / 2] = 0.5;
  return t;
}

BasisFamily::BasisFamily(BasisKind kind, int N) : kind_(kind), N_(N) {
  if (N < 1) throw std::invalid_argument("basis degree N must be at least 1");
}

BasisFamily BasisFamily::legendre(int N) {
  BasisFamily b(BasisKind::legendre, N);
  b.name_ = "L";
  b.init_f();
  return b;
}

BasisFamily BasisFamily::modified_legendre(int N) {
  BasisFamily b(BasisKind::modified_legendre, N);
  b.name_ = "mL";
  b.init_f();
  return b;
}

BasisFamily BasisFamily::chebyshev(int N) {
  BasisFamily b(BasisKind::chebyshev, N);
  b.name_ = "Ch";
  b.init_series();
  b.init_f();
  return b;
}

BasisFamily BasisFamily::runge_kutta(int N, RKNodes placement) {
  std::vector<double> t;
  std::string name;
  switch (placement) {
    case RKNodes::chebyshev:
      t = chebyshev_interp_nodes(N);
      name = "RK";
      break;
    case RKNodes::gauss:
      t = gauss_legendre(N).nodes;
      name = "RKg";
      break;
    case RKNodes::uniform:
      if (N < 1) throw std::invalid_argument("basis degree N must be at least 1");
      t.resize(N);
      for (int k = 0; k < N; ++k) t[k] = (k + 0.5) / N;
      name = "RKu";
      break;
  }
  BasisFamily b = runge_kutta(std::move(t));
  b.name_ = name;
  return b;
}

BasisFamily BasisFamily::runge_kutta(std::vector<double> nodes) {
  BasisFamily b(BasisKind::runge_kutta, static_cast<int>(nodes.size()));
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (!(nodes[k] > 0.0 && nodes[k] < 1.0))
      throw std::invalid_argument("Runge-Kutta nodes must lie in (0, 1)");
    if (k > 0 && !(nodes[k - 1] < nodes[k]))
      throw std::invalid_argument("Runge-Kutta nodes must be strictly increasing");
  }
  b.nodes_ = std::move(nodes);
  b.name_ = "RK*";
  b.init_series();
  b.init_f();
  return b;
}

void BasisFamily::init_series() {
  p_series_.assign(N_, {});
  if (kind_ == BasisKind::chebyshev) {
    for (int i = 0; i < N_; ++i) {
      p_series_[i].assign(i + 1, 0.0);
      p_series_[i][i] = 1.0;
    }
  } else {
    // Lagrange polynomials converted to Chebyshev coefficients by collocation
    // at N Chebyshev points.
    std::vector<double> x(N_);
    for (int j = 0; j < N_; ++j) x[j] = std::cos((2.0 * j + 1.0) / (2.0 * N_) * std::numbers::pi);
    Eigen::MatrixXd T(N_, N_);
    for (int j = 0; j < N_; ++j) {
      auto t = poly::chebyshev_values(N_ - 1, x[j]);
      for (int c = 0; c < N_; ++c) T(j, c) = t[c];
    }
    Eigen::MatrixXd Y(N_, N_);
    for (int j = 0; j < N_; ++j)
      for (int i = 0; i < N_; ++i) Y(j, i) = lagrange(nodes_, i, 0.5 * (x[j] + 1.0));
    Eigen::MatrixXd A = T.partialPivLu().solve(Y);
    for (int i = 0; i < N_; ++i) p_series_[i].assign(A.col(i).data(), A.col(i).data() + N_);
  }
  pbar_series_.assign(N_ + 1, {});
  pbar_series_[0] = {1.0};
  for (int i = 1; i <= N_; ++i) {
    auto s = poly::chebyshev_series_integral(p_series_[i - 1]);
    for (double& v : s) v *= 0.5;  // d tau = dx / 2
    pbar_series_[i] = std::move(s);
  }
}

void BasisFamily::init_f() {
  f_ = Eigen::VectorXd::Zero(N_ + 1);
  f_(0) = 1.0;
  switch (kind_) {
    case BasisKind::legendre:
      f_(1) = 1.0;
      break;
    case BasisKind::modified_legendre:
      for (int i = 1; i <= N_; ++i) f_(i) = (i % 2 == 1) ? 2.0 : 0.0;
      break;
    case BasisKind::chebyshev:
      for (int i = 0; i < N_; ++i)
        f_(i + 1) = (i == 1) ? 0.0 : 0.5 * (1.0 + (i % 2 == 0 ? 1.0 : -1.0)) / (1.0 - double(i) * i);
      break;
    case BasisKind::runge_kutta: {
      auto rule = gauss_legendre(N_);
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        Eigen::VectorXd p = p_all(rule.nodes[q]);
        f_.tail(N_) += rule.weights[q] * p;
      }
      break;
    }
  }
}

Eigen::VectorXd BasisFamily::p_all(double tau) const {
  tau = clamp01(tau);
  const double x = 2.0 * tau - 1.0;
  Eigen::VectorXd v(N_);
  switch (kind_) {
    case BasisKind::legendre: {
      auto p = poly::legendre_values(N_ - 1, x);
      for (int i = 0; i < N_; ++i) v(i) = p[i];
      break;
    }
    case BasisKind::modified_legendre: {
      auto dp = poly::legendre_derivatives(N_, x);
      for (int i = 0; i < N_; ++i) v(i) = 2.0 * dp[i + 1];
      break;
    }
    case BasisKind::chebyshev: {
      auto t = poly::chebyshev_values(N_ - 1, x);
      for (int i = 0; i < N_; ++i) v(i) = t[i];
      break;
    }
    case BasisKind::runge_kutta:
      for (int i = 0; i < N_; ++i) v(i) = lagrange(nodes_, i, tau);
      break;
  }
  return v;
}

Eigen::VectorXd BasisFamily::pbar_all(double tau) const {
  tau = clamp01(tau);
  const double x = 2.0 * tau - 1.0;
  Eigen::VectorXd v(N_ + 1);
  v(0) = 1.0;
  switch (kind_) {
    case BasisKind::legendre: {
      auto p = poly::legendre_values(N_, x);
      v(1) = tau;
      // int_{-1}^x P_n = (P_{n+1} - P_{n-1}) / (2n + 1), halved for d tau.
      for (int i = 2; i <= N_; ++i) v(i) = 0.5 * (p[i] - p[i - 2]) / (2.0 * i - 1.0);
      break;
    }
    case BasisKind::modified_legendre: {
      auto p = poly::legendre_values(N_, x);
      for (int i = 1; i <= N_; ++i) v(i) = p[i] - (i % 2 == 0 ? 1.0 : -1.0);
      break;
    }
    case BasisKind::chebyshev:
    case BasisKind::runge_kutta:
      for (int i = 1; i <= N_; ++i) v(i) = poly::chebyshev_series_value(pbar_series_[i], x);
      break;
  }
  return v;
}

double BasisFamily::p(int i, double tau) const {
  if (i < 0 || i >= N_) throw std::out_of_range("basis index out of range");
  check_tau(tau);
  if (kind_ == BasisKind::runge_kutta) return lagrange(nodes_, i, clamp01(tau));
  return p_all(tau)(i);
}

double BasisFamily::pbar(int i, double tau) const {
  if (i < 0 || i > N_) throw std::out_of_range("basis index out of range");
  check_tau(tau);
  return pbar_all(tau)(i);
}

double BasisFamily::pbar_derivative(int i, double tau) const {
  if (i < 0 || i > N_) throw std::out_of_range("basis index out of range");
  check_tau(tau);
  return i == 0 ? 0.0 : p(i - 1, tau);
}

double eval_p(const BasisFamily& family, int i, double tau) { return family.p(i, tau); }
double eval_pbar(const BasisFamily& family, int i, double tau) { return family.pbar(i, tau); }
double eval_pbar_derivative(const BasisFamily& family, int i, double tau) {
  return family.pbar_derivative(i, tau);
}
Eigen::VectorXd integral_weights_f(const BasisFamily& family) { return family.integral_weights(); }

BasisFamily make_basis(const std::string& label, int N) {
  if (label == "L") return BasisFamily::legendre(N);
  if (label == "mL") return BasisFamily::modified_legendre(N);
  if (label == "Ch") return BasisFamily::chebyshev(N);
  if (label == "RK") return BasisFamily::runge_kutta(N, RKNodes::chebyshev);
  if (label == "RKg") return BasisFamily::runge_kutta(N, RKNodes::gauss);
  if (label == "RKu") return BasisFamily::runge_kutta(N, RKNodes::uniform);
  throw std::invalid_argument("unknown basis '" + label + "' (expected L, mL, Ch, RK, RKg, RKu)");
}

}  // namespace lscm
