#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lscm/basis.hpp"
#include "lscm/constraint.hpp"
#include "lscm/mesh.hpp"
#include "lscm/repmap.hpp"

namespace lscm {

/// Precomputed factorizations for projecting coefficient vectors onto ker C.
class ProjectionContext {
 public:
  ProjectionContext(const Partition& partition, const BasisFamily& family, int m, int k);

  const Layout& layout() const { return layout_; }
  const ConstraintMatrix& constraint() const { return C_; }

  /// Euclidean projection via the per-component tridiagonal algorithm.
  Eigen::VectorXd project_euclidean(const Eigen::VectorXd& c) const;
  /// Projection orthogonal in the inner product c^T G d with block-diagonal G.
  Eigen::VectorXd project_L2(const Eigen::VectorXd& c) const;
  Eigen::VectorXd project_H1(const Eigen::VectorXd& c) const;

  /// Gram block U_j^T U_j (resp. Uhat_j^T Uhat_j) of interval j.
  const Eigen::MatrixXd& gram_L2(int j) const { return gram_L2_[j]; }
  const Eigen::MatrixXd& gram_H1(int j) const { return gram_H1_[j]; }

 private:
  struct Metric {
    std::vector<Eigen::LLT<Eigen::MatrixXd>> blocks;
    Eigen::LLT<Eigen::MatrixXd> schur;
  };
  Metric make_metric(const std::vector<Eigen::MatrixXd>& gram) const;
  Eigen::VectorXd apply_block_inverse(const Metric& metric, const Eigen::VectorXd& v) const;
  Eigen::VectorXd project_metric(const Metric& metric, const Eigen::VectorXd& c) const;

  Layout layout_;
  ConstraintMatrix C_;
  // Component factor (unscaled on uniform grids, where h cancels) and the
  // Cholesky factor of its tridiagonal Gram matrix: diagonal l, subdiagonal e.
  ConstraintMatrix Cs_source_;
  Eigen::VectorXd chol_diag_;
  Eigen::VectorXd chol_sub_;
  std::vector<Eigen::MatrixXd> gram_L2_;
  std::vector<Eigen::MatrixXd> gram_H1_;
  Metric metric_L2_;
  Metric metric_H1_;
};

CoefficientVector project_coefficients(const CoefficientVector& c, const ProjectionContext& context);
CoefficientVector project_L2(const CoefficientVector& c, const ProjectionContext& context);
CoefficientVector project_H1(const CoefficientVector& c, const ProjectionContext& context);

/// Largest jump |x_kappa(t_j - 0) - x_kappa(t_j + 0)| over interior
/// breakpoints and differential components.
double max_jump(const CoefficientVector& c, const Partition& partition, const BasisFamily& family);

}  // namespace lscm
