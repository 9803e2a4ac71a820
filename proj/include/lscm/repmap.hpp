#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "lscm/basis.hpp"
#include "lscm/mesh.hpp"
#include "lscm/quadrature.hpp"

namespace lscm {

/// Index structure of the coefficient vector: n intervals, m components of
/// which the first k are differentiated, polynomial degree N.
struct Layout {
  int n = 0;
  int m = 0;
  int k = 0;
  int N = 0;

  Layout() = default;
  Layout(int n, int m, int k, int N);

  int block_size() const { return m * N + k; }
  int size() const { return n * block_size(); }
  int component_length(int kappa) const { return kappa < k ? N + 1 : N; }
  /// Position of c_{j,kappa,0}.
  int offset(int j, int kappa) const;

  bool operator==(const Layout&) const = default;
};

/// Coefficients ordered interval-major, then component-major; differential
/// components carry N+1 entries, algebraic ones N.
class CoefficientVector {
 public:
  CoefficientVector() = default;
  explicit CoefficientVector(const Layout& layout);
  CoefficientVector(const Layout& layout, Eigen::VectorXd values);

  const Layout& layout() const { return layout_; }
  const Eigen::VectorXd& values() const { return data_; }
  Eigen::VectorXd& values() { return data_; }

  Eigen::Ref<const Eigen::VectorXd> component(int j, int kappa) const;
  Eigen::Ref<Eigen::VectorXd> component(int j, int kappa);
  Eigen::Ref<const Eigen::VectorXd> block(int j) const;
  Eigen::Ref<Eigen::VectorXd> block(int j);

 private:
  Layout layout_;
  Eigen::VectorXd data_;
};

/// Values of the bases at the interpolation nodes: Vbar(i,a) = pbar_a(sbar_i),
/// V(i,a) = p_a(s_i), Vring(i,a) = pbar_a'(sbar_i), plus square roots of the
/// quadrature weights.
struct InterpolationMatrices {
  Eigen::MatrixXd Vbar;
  Eigen::MatrixXd V;
  Eigen::MatrixXd Vring;
  Eigen::VectorXd gamma_bar_root;
  Eigen::VectorXd gamma_root;
  std::vector<double> sigma_bar;
  std::vector<double> sigma;
};

/// Uses Gauss-Legendre rules with N+1 and N points.
InterpolationMatrices build_interp_matrices(const BasisFamily& family);
/// Uses caller-supplied rules; they must integrate degree 2N and 2N-2 exactly.
InterpolationMatrices build_interp_matrices(const BasisFamily& family, const QuadratureRule& bar_rule,
                                            const QuadratureRule& rule);

/// Omega_j(t) for an interval of length h at local coordinate tau: maps the
/// interval block c_j to x_j(t) (m x (mN+k)).
Eigen::MatrixXd omega(const BasisFamily& family, const Layout& layout, double h, double tau);
/// (D Omega_j)'(t): maps c_j to (Dx_j)'(t) (k x (mN+k)).
Eigen::MatrixXd omega_derivative(const BasisFamily& family, const Layout& layout, double tau);

/// Per-interval factor U_j with |U_j c_j| = ||x_j||_{L2(t_{j-1}, t_j)}.
Eigen::MatrixXd interval_factor_L2(const InterpolationMatrices& mats, const Layout& layout, double h);
/// Per-interval factor Uhat_j for the broken H1_D norm.
Eigen::MatrixXd interval_factor_H1(const InterpolationMatrices& mats, const Layout& layout, double h);

Eigen::VectorXd evaluate(const CoefficientVector& c, const Partition& partition, const BasisFamily& family,
                         double t);
Eigen::VectorXd evaluate_Dx_derivative(const CoefficientVector& c, const Partition& partition,
                                       const BasisFamily& family, double t);
/// x_j at local coordinate tau of interval j (gives one-sided limits at breakpoints).
Eigen::VectorXd evaluate_on_interval(const CoefficientVector& c, const Partition& partition,
                                     const BasisFamily& family, int j, double tau);
Eigen::VectorXd evaluate_Dx_on_interval(const CoefficientVector& c, const Partition& partition,
                                        const BasisFamily& family, int j, double tau);

/// Samples for one interval: differential(i, kappa) at the N+1 nodes sigma_bar,
/// algebraic(i, kappa - k) at the N nodes sigma (both shifted to the interval).
struct IntervalSamples {
  Eigen::MatrixXd differential;
  Eigen::MatrixXd algebraic;
};

CoefficientVector coefficients_from_function(const std::vector<IntervalSamples>& samples,
                                             const Partition& partition, const BasisFamily& family, int m, int k);

/// Samples x at the interpolation nodes of every interval and inverts the
/// representation map. Exact for x in the piecewise polynomial space.
CoefficientVector interpolate(const std::function<Eigen::VectorXd(double)>& x, const Partition& partition,
                              const BasisFamily& family, int m, int k);

double norm_L2(const CoefficientVector& c, const Partition& partition, const BasisFamily& family);
double norm_H1Dpi(const CoefficientVector& c, const Partition& partition, const BasisFamily& family);

struct RepMapConditioning {
  double sigma_min_U = 0.0;
  double sigma_max_U = 0.0;
  double sigma_min_Uhat = 0.0;
  double sigma_max_Uhat = 0.0;

  double norm_R_L2() const { return sigma_max_U; }
  double norm_Rinv_L2() const { return 1.0 / sigma_min_U; }
  double norm_R_H1() const { return sigma_max_Uhat; }
  double norm_Rinv_H1() const { return 1.0 / sigma_min_Uhat; }
  double kappa_U() const { return sigma_max_U / sigma_min_U; }
  double kappa_Uhat() const { return sigma_max_Uhat / sigma_min_Uhat; }
};

/// Extremal singular values of the block-diagonal U and Uhat, computed per block.
RepMapConditioning rep_map_conditioning(const Partition& partition, const BasisFamily& family, int m, int k);

}  // namespace lscm
