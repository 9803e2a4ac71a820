#include "lscm/projection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lscm/errors.hpp"

namespace lscm {

namespace {

Partition unit_steps_if_uniform(const Partition& p) {
  if (!p.is_uniform()) return p;
  std::vector<double> t(p.n() + 1);
  for (int j = 0; j <= p.n(); ++j) t[j] = j;
  return Partition(std::move(t));
}

// y = C_s x for the component factor; x has n(N+1) entries.
Eigen::VectorXd cs_apply(const ConstraintMatrix& C, const Eigen::VectorXd& x) {
  const int n = C.layout().n, N = C.layout().N;
  const auto& h = C.steps();
  Eigen::VectorXd y(n - 1);
  for (int j = 0; j + 1 < n; ++j)
    y(j) = h[j] * C.f().dot(x.segment(j * (N + 1), N + 1)) - h[j + 1] * x((j + 1) * (N + 1));
  return y;
}

Eigen::VectorXd cs_apply_transpose(const ConstraintMatrix& C, const Eigen::VectorXd& y) {
  const int n = C.layout().n, N = C.layout().N;
  const auto& h = C.steps();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n * (N + 1));
  for (int j = 0; j + 1 < n; ++j) {
    x.segment(j * (N + 1), N + 1) += h[j] * y(j) * C.f();
    x((j + 1) * (N + 1)) -= h[j + 1] * y(j);
  }
  return x;
}

}  // namespace

ProjectionContext::ProjectionContext(const Partition& partition, const BasisFamily& family, int m, int k)
    : layout_(partition.n(), m, k, family.N()),
      C_(partition, family, m, k),
      Cs_source_(unit_steps_if_uniform(partition), family, m, k) {
  const int n = layout_.n;
  if (n >= 2) {
    SymTridiagonal T = CsCst_matrix(unit_steps_if_uniform(partition), family.integral_weights());
    chol_diag_.resize(n - 1);
    chol_sub_ = Eigen::VectorXd::Zero(std::max(n - 2, 0));
    for (int i = 0; i < n - 1; ++i) {
      double d = T.diag(i) - (i > 0 ? chol_sub_(i - 1) * chol_sub_(i - 1) : 0.0);
      if (!(d > 0.0)) throw NumericError("C_s C_s^T is not positive definite");
      chol_diag_(i) = std::sqrt(d);
      if (i + 1 < n - 1) chol_sub_(i) = T.off(i) / chol_diag_(i);
    }
  }
  InterpolationMatrices mats = build_interp_matrices(family);
  gram_L2_.resize(n);
  gram_H1_.resize(n);
  for (int j = 0; j < n; ++j) {
    Eigen::MatrixXd U = interval_factor_L2(mats, layout_, partition.step(j));
    Eigen::MatrixXd Uh = interval_factor_H1(mats, layout_, partition.step(j));
    gram_L2_[j] = U.transpose() * U;
    gram_H1_[j] = Uh.transpose() * Uh;
  }
  metric_L2_ = make_metric(gram_L2_);
  metric_H1_ = make_metric(gram_H1_);
}

ProjectionContext::Metric ProjectionContext::make_metric(const std::vector<Eigen::MatrixXd>& gram) const {
  Metric metric;
  for (const auto& G : gram) {
    metric.blocks.emplace_back(G);
    if (metric.blocks.back().info() != Eigen::Success) throw NumericError("Gram block is not positive definite");
  }
  if (C_.rows() > 0) {
    Eigen::MatrixXd Ct = C_.to_dense().transpose();
    Eigen::MatrixXd X(Ct.rows(), Ct.cols());
    for (Eigen::Index col = 0; col < Ct.cols(); ++col) X.col(col) = apply_block_inverse(metric, Ct.col(col));
    Eigen::MatrixXd S(C_.rows(), C_.rows());
    for (Eigen::Index col = 0; col < X.cols(); ++col) S.col(col) = C_.apply(X.col(col));
    S = 0.5 * (S + S.transpose()).eval();
    metric.schur.compute(S);
    if (metric.schur.info() != Eigen::Success) throw NumericError("Schur complement is not positive definite");
  }
  return metric;
}

Eigen::VectorXd ProjectionContext::apply_block_inverse(const Metric& metric, const Eigen::VectorXd& v) const {
  const int bs = layout_.block_size();
  Eigen::VectorXd x(v.size());
  for (int j = 0; j < layout_.n; ++j) x.segment(j * bs, bs) = metric.blocks[j].solve(v.segment(j * bs, bs));
  return x;
}

Eigen::VectorXd ProjectionContext::project_metric(const Metric& metric, const Eigen::VectorXd& c) const {
  if (c.size() != layout_.size()) throw std::invalid_argument("projection: length mismatch");
  if (C_.rows() == 0) return c;
  Eigen::VectorXd y = metric.schur.solve(C_.apply(c));
  return c - apply_block_inverse(metric, C_.apply_transpose(y));
}

Eigen::VectorXd ProjectionContext::project_euclidean(const Eigen::VectorXd& c) const {
  if (c.size() != layout_.size()) throw std::invalid_argument("projection: length mismatch");
  Eigen::VectorXd out = c;
  const int n = layout_.n;
  if (n < 2) return out;
  for (int kappa = 0; kappa < layout_.k; ++kappa) {
    Eigen::VectorXd ck = Cs_source_.gather_component(c, kappa);
    // Solve (C_s C_s^T) d = C_s c^kappa with the tridiagonal Cholesky factor.
    Eigen::VectorXd d = cs_apply(Cs_source_, ck);
    for (int i = 0; i < n - 1; ++i) {
      if (i > 0) d(i) -= chol_sub_(i - 1) * d(i - 1);
      d(i) /= chol_diag_(i);
    }
    for (int i = n - 2; i >= 0; --i) {
      if (i + 1 < n - 1) d(i) -= chol_sub_(i) * d(i + 1);
      d(i) /= chol_diag_(i);
    }
    ck -= cs_apply_transpose(Cs_source_, d);
    Cs_source_.scatter_component(out, kappa, ck);
  }
  return out;
}

Eigen::VectorXd ProjectionContext::project_L2(const Eigen::VectorXd& c) const { return project_metric(metric_L2_, c); }
Eigen::VectorXd ProjectionContext::project_H1(const Eigen::VectorXd& c) const { return project_metric(metric_H1_, c); }

CoefficientVector project_coefficients(const CoefficientVector& c, const ProjectionContext& context) {
  return CoefficientVector(c.layout(), context.project_euclidean(c.values()));
}
CoefficientVector project_L2(const CoefficientVector& c, const ProjectionContext& context) {
  return CoefficientVector(c.layout(), context.project_L2(c.values()));
}
CoefficientVector project_H1(const CoefficientVector& c, const ProjectionContext& context) {
  return CoefficientVector(c.layout(), context.project_H1(c.values()));
}

double max_jump(const CoefficientVector& c, const Partition& partition, const BasisFamily& family) {
  double jump = 0.0;
  for (int j = 0; j + 1 < partition.n(); ++j) {
    Eigen::VectorXd left = evaluate_on_interval(c, partition, family, j, 1.0);
    Eigen::VectorXd right = evaluate_on_interval(c, partition, family, j + 1, 0.0);
    jump = std::max(jump, (left - right).head(c.layout().k).cwiseAbs().maxCoeff());
  }
  return jump;
}

}  // namespace lscm
