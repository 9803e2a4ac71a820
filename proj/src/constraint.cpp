#include "lscm/constraint.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lscm/errors.hpp"

namespace lscm {

ConstraintMatrix::ConstraintMatrix(const Partition& partition, const BasisFamily& family, int m, int k)
    : layout_(partition.n(), m, k, family.N()), f_(family.integral_weights()) {
  h_.resize(partition.n());
  for (int j = 0; j < partition.n(); ++j) h_[j] = partition.step(j);
}

Eigen::VectorXd ConstraintMatrix::apply(const Eigen::VectorXd& c) const {
  if (c.size() != cols()) throw std::invalid_argument("constraint apply: length mismatch");
  Eigen::VectorXd y(rows());
  const int k = layout_.k, N = layout_.N;
  for (int j = 0; j + 1 < layout_.n; ++j)
    for (int kappa = 0; kappa < k; ++kappa)
      y(j * k + kappa) = h_[j] * f_.dot(c.segment(layout_.offset(j, kappa), N + 1)) -
                         h_[j + 1] * c(layout_.offset(j + 1, kappa));
  return y;
}

Eigen::VectorXd ConstraintMatrix::apply_transpose(const Eigen::VectorXd& y) const {
  if (y.size() != rows()) throw std::invalid_argument("constraint apply_transpose: length mismatch");
  Eigen::VectorXd c = Eigen::VectorXd::Zero(cols());
  const int k = layout_.k, N = layout_.N;
  for (int j = 0; j + 1 < layout_.n; ++j)
    for (int kappa = 0; kappa < k; ++kappa) {
      double v = y(j * k + kappa);
      c.segment(layout_.offset(j, kappa), N + 1) += h_[j] * v * f_;
      c(layout_.offset(j + 1, kappa)) -= h_[j + 1] * v;
    }
  return c;
}

Eigen::MatrixXd ConstraintMatrix::to_dense() const {
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(rows(), cols());
  const int k = layout_.k, N = layout_.N;
  for (int j = 0; j + 1 < layout_.n; ++j)
    for (int kappa = 0; kappa < k; ++kappa) {
      int r = j * k + kappa;
      C.row(r).segment(layout_.offset(j, kappa), N + 1) = h_[j] * f_.transpose();
      C(r, layout_.offset(j + 1, kappa)) = -h_[j + 1];
    }
  return C;
}

Eigen::MatrixXd ConstraintMatrix::component_matrix() const {
  const int n = layout_.n, N = layout_.N;
  Eigen::MatrixXd Cs = Eigen::MatrixXd::Zero(n - 1, n * (N + 1));
  for (int j = 0; j + 1 < n; ++j) {
    Cs.row(j).segment(j * (N + 1), N + 1) = h_[j] * f_.transpose();
    Cs(j, (j + 1) * (N + 1)) = -h_[j + 1];
  }
  return Cs;
}

Eigen::VectorXd ConstraintMatrix::gather_component(const Eigen::VectorXd& c, int kappa) const {
  const int N = layout_.N;
  Eigen::VectorXd ck(layout_.n * (N + 1));
  for (int j = 0; j < layout_.n; ++j) ck.segment(j * (N + 1), N + 1) = c.segment(layout_.offset(j, kappa), N + 1);
  return ck;
}

void ConstraintMatrix::scatter_component(Eigen::VectorXd& c, int kappa, const Eigen::VectorXd& ck) const {
  const int N = layout_.N;
  for (int j = 0; j < layout_.n; ++j) c.segment(layout_.offset(j, kappa), N + 1) = ck.segment(j * (N + 1), N + 1);
}

ConstraintMatrix build_C(const Partition& partition, const BasisFamily& family, int m, int k) {
  return ConstraintMatrix(partition, family, m, k);
}

Eigen::MatrixXd SymTridiagonal::to_dense() const {
  const Eigen::Index n = diag.size();
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  T.diagonal() = diag;
  for (Eigen::Index i = 0; i + 1 < n; ++i) T(i, i + 1) = T(i + 1, i) = off(i);
  return T;
}

namespace {

SymTridiagonal cscst_from_steps(const std::vector<double>& h, double f2) {
  const int n = static_cast<int>(h.size());
  SymTridiagonal T;
  T.diag.resize(n - 1);
  T.off.resize(n - 2);
  for (int j = 0; j + 1 < n; ++j) {
    T.diag(j) = h[j] * h[j] * f2 + h[j + 1] * h[j + 1];
    if (j + 2 < n) T.off(j) = -h[j + 1] * h[j + 1];
  }
  return T;
}

}  // namespace

SymTridiagonal CsCst_matrix(const Partition& partition, const Eigen::VectorXd& f) {
  const int n = partition.n();
  if (n < 2) throw std::invalid_argument("CsCst_matrix: need at least two intervals");
  std::vector<double> h(n);
  for (int j = 0; j < n; ++j) h[j] = partition.step(j);
  return cscst_from_steps(h, f.squaredNorm());
}

std::vector<double> toeplitz_eigenvalues(double fnorm2, int n) {
  if (n < 2) throw std::invalid_argument("toeplitz_eigenvalues: need n >= 2");
  if (!(fnorm2 >= 1.0)) throw std::invalid_argument("toeplitz_eigenvalues: |f|^2 must be at least 1");
  std::vector<double> lam(n - 1);
  for (int j = 1; j < n; ++j) lam[j - 1] = 1.0 + fnorm2 - 2.0 * std::cos(j * std::numbers::pi / n);
  return lam;
}

ConstraintConditioning constraint_conditioning(const ConstraintMatrix& C) {
  const int n = C.layout().n;
  if (n < 2) throw std::invalid_argument("constraint_conditioning: need at least two intervals");
  double lmin, lmax;
  const auto& h = C.steps();
  bool uniform = std::all_of(h.begin(), h.end(), [&](double x) { return std::abs(x - h[0]) <= 1e-13 * h[0]; });
  if (uniform) {
    auto lam = toeplitz_eigenvalues(C.f().squaredNorm(), n);
    lmin = h[0] * h[0] * lam.front();
    lmax = h[0] * h[0] * lam.back();
  } else {
    SymTridiagonal T = cscst_from_steps(h, C.f().squaredNorm());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    Eigen::VectorXd d = T.diag, e = T.off;
    es.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
    lmin = es.eigenvalues().minCoeff();
    lmax = es.eigenvalues().maxCoeff();
  }
  ConstraintConditioning r;
  r.norm_C = std::sqrt(lmax);
  r.norm_C_pinv = 1.0 / std::sqrt(lmin);
  r.kappa = r.norm_C * r.norm_C_pinv;
  return r;
}

namespace {

Eigen::MatrixXd kernel_from_transpose_qr(const Eigen::MatrixXd& Ct) {
  const Eigen::Index rows = Ct.rows(), r = Ct.cols();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(Ct);
  const Eigen::MatrixXd& R = qr.matrixQR();
  double rmax = 0.0;
  for (Eigen::Index i = 0; i < r; ++i) rmax = std::max(rmax, std::abs(R(i, i)));
  for (Eigen::Index i = 0; i < r; ++i)
    if (std::abs(R(i, i)) <= 1e-13 * rmax * static_cast<double>(rows))
      throw NumericError("constraint matrix is rank deficient");
  Eigen::MatrixXd tail = Eigen::MatrixXd::Zero(rows, rows - r);
  tail.bottomRows(rows - r).setIdentity();
  return qr.householderQ() * tail;
}

}  // namespace

NullspaceBasis nullspace_basis(const ConstraintMatrix& C) {
  const Layout& L = C.layout();
  NullspaceBasis nb;
  nb.D = Eigen::MatrixXd::Zero(L.size(), L.n * L.m * L.N + L.k);
  Eigen::MatrixXd Ds;
  if (L.n == 1)
    Ds = Eigen::MatrixXd::Identity(L.N + 1, L.N + 1);
  else
    Ds = kernel_from_transpose_qr(C.component_matrix().transpose());
  int col = 0;
  for (int kappa = 0; kappa < L.k; ++kappa) {
    for (Eigen::Index q = 0; q < Ds.cols(); ++q, ++col)
      for (int j = 0; j < L.n; ++j)
        nb.D.col(col).segment(L.offset(j, kappa), L.N + 1) = Ds.col(q).segment(j * (L.N + 1), L.N + 1);
  }
  for (int j = 0; j < L.n; ++j)
    for (int kappa = L.k; kappa < L.m; ++kappa)
      for (int l = 0; l < L.N; ++l, ++col) nb.D(L.offset(j, kappa) + l, col) = 1.0;
  return nb;
}

NullspaceBasis nullspace_basis_dense(const Eigen::MatrixXd& C) {
  if (C.rows() == 0) return NullspaceBasis{Eigen::MatrixXd::Identity(C.cols(), C.cols())};
  return NullspaceBasis{kernel_from_transpose_qr(C.transpose())};
}

}  // namespace lscm
