#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace lscm {

/// Quadrature rule on [0, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int exactness_degree = 0;
};

/// Gauss-Legendre rule with `count` nodes on [0, 1] (Golub-Welsch followed by
/// a Newton polish of each node).
QuadratureRule gauss_legendre(int count);

enum class NodeFamily { gauss_legendre, uniform };

/// Collocation nodes 0 <= rho_1 < ... < rho_M <= 1.
std::vector<double> collocation_nodes(int M, NodeFamily kind);

/// Choice of the positive definite matrix L in the discrete functional.
///  collocation: L = I / M
///  quadrature:  L = diag(gamma), interpolatory weights at rho
///  restriction: L = V^{-T} V^{-1}, exact L2 norm of the interpolant
enum class WeightVariant { collocation, quadrature, restriction };

std::string to_string(WeightVariant v);
/// Accepts "C", "I", "R" (case-insensitive) or the enum names.
WeightVariant parse_weight_variant(const std::string& s);

struct WeightMatrix {
  WeightVariant variant;
  Eigen::MatrixXd L;
  /// Factor with S^T S = L, applied to the collocation index during assembly.
  Eigen::MatrixXd S;
};

WeightMatrix weight_matrix(WeightVariant variant, const std::vector<double>& rho);

/// Weights of the interpolatory quadrature rule at the given distinct nodes.
std::vector<double> interpolatory_weights(const std::vector<double>& nodes);

/// Collocation matrix V(i, a) = phi_a(x_i) of the L2(0,1)-orthonormal shifted
/// Legendre polynomials phi_a = sqrt(2a+1) P_a(2x-1), a < cols.
Eigen::MatrixXd orthonormal_legendre_matrix(const std::vector<double>& x, int cols);

}  // namespace lscm
