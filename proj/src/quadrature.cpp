#include "lscm/quadrature.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "lscm/polynomial.hpp"

namespace lscm {

namespace {

void require_distinct_increasing(const std::vector<double>& x, const char* what) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (!(x[i] < x[i + 1])) throw std::invalid_argument(std::string(what) + " must be strictly increasing");
}

}  // namespace

QuadratureRule gauss_legendre(int count) {
  if (count < 1) throw std::invalid_argument("gauss_legendre: count must be positive");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(count, count);
  for (int k = 1; k < count; ++k) {
    double beta = k / std::sqrt(4.0 * k * k - 1.0);
    J(k, k - 1) = J(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  QuadratureRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  for (int i = 0; i < count; ++i) {
    double x = es.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      auto p = poly::legendre_values(count, x);
      auto dp = poly::legendre_derivatives(count, x);
      x -= p[count] / dp[count];
    }
    double dp = poly::legendre_derivatives(count, x)[count];
    rule.nodes[i] = 0.5 * (x + 1.0);
    rule.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  // Enforce exact symmetry about 1/2.
  for (int i = 0; i < count / 2; ++i) {
    int j = count - 1 - i;
    double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = 0.5 - x;
    rule.nodes[j] = 0.5 + x;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (count % 2 == 1) rule.nodes[count / 2] = 0.5;
  rule.exactness_degree = 2 * count - 1;
  return rule;
}

std::vector<double> collocation_nodes(int M, NodeFamily kind) {
  if (M < 1) throw std::invalid_argument("collocation_nodes: M must be positive");
  if (kind == NodeFamily::gauss_legendre) return gauss_legendre(M).nodes;
  if (M == 1) throw std::invalid_argument("uniform collocation nodes need M >= 2");
  std::vector<double> rho(M);
  for (int i = 0; i < M; ++i) rho[i] = static_cast<double>(i) / (M - 1);
  return rho;
}

std::string to_string(WeightVariant v) {
  switch (v) {
    case WeightVariant::collocation: return "C";
    case WeightVariant::quadrature: return "I";
    case WeightVariant::restriction: return "R";
  }
  return "?";
}

WeightVariant parse_weight_variant(const std::string& s) {
  std::string u;
  for (char ch : s) u += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (u == "C" || u == "COLLOCATION") return WeightVariant::collocation;
  if (u == "I" || u == "QUADRATURE") return WeightVariant::quadrature;
  if (u == "R" || u == "RESTRICTION") return WeightVariant::restriction;
  throw std::invalid_argument("unknown functional variant '" + s + "'");
}

Eigen::MatrixXd orthonormal_legendre_matrix(const std::vector<double>& x, int cols) {
  Eigen::MatrixXd V(x.size(), cols);
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto p = poly::legendre_values(std::max(cols - 1, 0), 2.0 * x[i] - 1.0);
    for (int a = 0; a < cols; ++a) V(i, a) = std::sqrt(2.0 * a + 1.0) * p[a];
  }
  return V;
}

std::vector<double> interpolatory_weights(const std::vector<double>& nodes) {
  require_distinct_increasing(nodes, "quadrature nodes");
  // gamma_i = int l_i = sum_a (V^{-1})_{a i} int phi_a = (V^{-1})_{0 i}
  const int M = static_cast<int>(nodes.size());
  Eigen::MatrixXd V = orthonormal_legendre_matrix(nodes, M);
  Eigen::VectorXd e0 = Eigen::VectorXd::Unit(M, 0);
  Eigen::VectorXd g = V.transpose().colPivHouseholderQr().solve(e0);
  return std::vector<double>(g.data(), g.data() + M);
}

WeightMatrix weight_matrix(WeightVariant variant, const std::vector<double>& rho) {
  const int M = static_cast<int>(rho.size());
  if (M < 1) throw std::invalid_argument("weight_matrix: empty node set");
  require_distinct_increasing(rho, "collocation nodes");
  WeightMatrix w{variant, Eigen::MatrixXd(), Eigen::MatrixXd()};
  switch (variant) {
    case WeightVariant::collocation:
      w.S = Eigen::MatrixXd::Identity(M, M) / std::sqrt(static_cast<double>(M));
      w.L = Eigen::MatrixXd::Identity(M, M) / static_cast<double>(M);
      return w;
    case WeightVariant::quadrature: {
      auto g = interpolatory_weights(rho);
      w.S = Eigen::MatrixXd::Zero(M, M);
      w.L = Eigen::MatrixXd::Zero(M, M);
      for (int i = 0; i < M; ++i) {
        if (!(g[i] > 0.0))
          throw std::invalid_argument("interpolatory weights at the collocation nodes are not positive");
        w.S(i, i) = std::sqrt(g[i]);
        w.L(i, i) = g[i];
      }
      return w;
    }
    case WeightVariant::restriction: {
      Eigen::MatrixXd V = orthonormal_legendre_matrix(rho, M);
      Eigen::FullPivLU<Eigen::MatrixXd> lu(V);
      if (!lu.isInvertible()) throw std::invalid_argument("collocation matrix V is singular");
      w.S = lu.inverse();
      w.L = w.S.transpose() * w.S;
      w.L = 0.5 * (w.L + w.L.transpose()).eval();
      return w;
    }
  }
  throw std::invalid_argument("unknown weight variant");
}

}  // namespace lscm
