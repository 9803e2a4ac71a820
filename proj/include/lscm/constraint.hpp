#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lscm/basis.hpp"
#include "lscm/mesh.hpp"
#include "lscm/repmap.hpp"

namespace lscm {

/// Continuity constraints C c = 0. The row for breakpoint t_{j+1} (between
/// intervals j and j+1) and differential component kappa is
///   h_j <f, c_{j,kappa}> - h_{j+1} c_{j+1,kappa,0},
/// stored row-major by breakpoint then component. The matrix is never formed
/// unless to_dense() is called.
class ConstraintMatrix {
 public:
  ConstraintMatrix(const Partition& partition, const BasisFamily& family, int m, int k);

  const Layout& layout() const { return layout_; }
  int rows() const { return layout_.k * (layout_.n - 1); }
  int cols() const { return layout_.size(); }
  const Eigen::VectorXd& f() const { return f_; }
  const std::vector<double>& steps() const { return h_; }

  Eigen::VectorXd apply(const Eigen::VectorXd& c) const;
  Eigen::VectorXd apply_transpose(const Eigen::VectorXd& y) const;
  Eigen::MatrixXd to_dense() const;

  /// The scaled single-component factor C_s diag(h): (n-1) x n(N+1), acting
  /// on c^kappa = [c_{0,kappa}; c_{1,kappa}; ...].
  Eigen::MatrixXd component_matrix() const;

  /// Gathers c^kappa from c, and scatters it back.
  Eigen::VectorXd gather_component(const Eigen::VectorXd& c, int kappa) const;
  void scatter_component(Eigen::VectorXd& c, int kappa, const Eigen::VectorXd& ck) const;

 private:
  Layout layout_;
  Eigen::VectorXd f_;
  std::vector<double> h_;
};

ConstraintMatrix build_C(const Partition& partition, const BasisFamily& family, int m, int k);

/// Symmetric tridiagonal matrix stored by its diagonal and off-diagonal.
struct SymTridiagonal {
  Eigen::VectorXd diag;
  Eigen::VectorXd off;
  Eigen::MatrixXd to_dense() const;
};

/// C_s C_s^T for the scaled factor: diagonal h_j^2|f|^2 + h_{j+1}^2,
/// off-diagonal -h_{j+1}^2.
SymTridiagonal CsCst_matrix(const Partition& partition, const Eigen::VectorXd& f);

/// Eigenvalues 1 + |f|^2 - 2 cos(j pi / n), j = 1..n-1, ascending.
std::vector<double> toeplitz_eigenvalues(double fnorm2, int n);

struct ConstraintConditioning {
  double norm_C = 0.0;
  double norm_C_pinv = 0.0;
  double kappa = 0.0;
};

ConstraintConditioning constraint_conditioning(const ConstraintMatrix& C);

struct NullspaceBasis {
  /// Column-orthonormal basis of ker C, n(mN+k) x (nmN+k).
  Eigen::MatrixXd D;
};

/// Structured basis: Householder QR of the single-component factor C_s^T,
/// replicated over differential components; algebraic coordinates are free.
NullspaceBasis nullspace_basis(const ConstraintMatrix& C);
/// Basis from a Householder QR of the dense C^T. Spans the same space with
/// different columns; mainly useful as a cross-check.
NullspaceBasis nullspace_basis_dense(const Eigen::MatrixXd& C);

}  // namespace lscm
