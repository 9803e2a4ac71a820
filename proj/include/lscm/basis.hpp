#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace lscm {

enum class BasisKind { legendre, modified_legendre, chebyshev, runge_kutta };

/// Node placement for the Runge-Kutta (Lagrange) basis.
enum class RKNodes { chebyshev, gauss, uniform };

/// Shifted Chebyshev nodes 1/2 (1 + cos((2k-1) pi / (2N))), increasing.
std::vector<double> chebyshev_interp_nodes(int N);

/// A basis {p_0, ..., p_{N-1}} of polynomials of degree < N on [0, 1] and the
/// derived basis {pbar_0, ..., pbar_N} of degree <= N with pbar_0 = 1 and
/// pbar_i(tau) = int_0^tau p_{i-1}.
class BasisFamily {
 public:
  static BasisFamily legendre(int N);
  static BasisFamily modified_legendre(int N);
  static BasisFamily chebyshev(int N);
  static BasisFamily runge_kutta(int N, RKNodes placement = RKNodes::chebyshev);
  /// Lagrange basis on user nodes, strictly increasing inside (0, 1).
  static BasisFamily runge_kutta(std::vector<double> nodes);

  BasisKind kind() const { return kind_; }
  int N() const { return N_; }
  /// Interpolation nodes (Runge-Kutta only; empty otherwise).
  const std::vector<double>& nodes() const { return nodes_; }
  /// Short label used in tables: L, mL, Ch, RK, RKg, RKu (RK* for custom nodes).
  const std::string& name() const { return name_; }

  double p(int i, double tau) const;
  double pbar(int i, double tau) const;
  /// pbar_i'(tau): 0 for i = 0, p_{i-1}(tau) otherwise.
  double pbar_derivative(int i, double tau) const;

  /// All p_0..p_{N-1} at tau, without range checks on tau beyond clamping.
  Eigen::VectorXd p_all(double tau) const;
  /// All pbar_0..pbar_N at tau.
  Eigen::VectorXd pbar_all(double tau) const;

  /// f = [1, int p_0, ..., int p_{N-1}], equal to pbar_i(1) entrywise.
  const Eigen::VectorXd& integral_weights() const { return f_; }

 private:
  BasisFamily(BasisKind kind, int N);
  void init_series();
  void init_f();

  BasisKind kind_;
  int N_;
  std::string name_;
  std::vector<double> nodes_;
  // Chebyshev-series coefficients in x = 2 tau - 1 (Chebyshev and Runge-Kutta).
  std::vector<std::vector<double>> p_series_;
  std::vector<std::vector<double>> pbar_series_;
  Eigen::VectorXd f_;
};

double eval_p(const BasisFamily& family, int i, double tau);
double eval_pbar(const BasisFamily& family, int i, double tau);
double eval_pbar_derivative(const BasisFamily& family, int i, double tau);
Eigen::VectorXd integral_weights_f(const BasisFamily& family);

/// Builds a family from a table label: L, mL, Ch, RK, RKg, RKu.
BasisFamily make_basis(const std::string& label, int N);

}  // namespace lscm
