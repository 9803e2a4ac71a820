#include "lscm/assembly.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lscm {

void DAEProblem::validate() const {
  if (!(a < b)) throw std::invalid_argument("DAE problem: need a < b");
  if (!(0 <= l_dyn && l_dyn <= k && k < m && k > 0))
    throw std::invalid_argument("DAE problem: need 0 <= l_dyn <= k < m and k > 0");
  if (!A || !B || !q) throw std::invalid_argument("DAE problem: A, B and q must be set");
  if (Ga.rows() != l_dyn || Gb.rows() != l_dyn || d.size() != l_dyn ||
      (l_dyn > 0 && (Ga.cols() != m || Gb.cols() != m)))
    throw std::invalid_argument("DAE problem: boundary data has wrong shape");
  if (l_dyn > 0 && (Ga.rightCols(m - k).norm() != 0.0 || Gb.rightCols(m - k).norm() != 0.0))
    throw std::invalid_argument("DAE problem: boundary conditions may only involve differential components");
}

Eigen::VectorXd DiscreteSystem::multiply(const Eigen::VectorXd& c) const {
  return multiply(Eigen::MatrixXd(c)).col(0);
}

Eigen::MatrixXd DiscreteSystem::multiply(const Eigen::MatrixXd& X) const {
  if (X.rows() != cols()) throw std::invalid_argument("system multiply: dimension mismatch");
  const int bs = layout.block_size(), br = layout.m * M();
  Eigen::MatrixXd Y(rows(), X.cols());
  for (int j = 0; j < layout.n; ++j) Y.middleRows(j * br, br).noalias() = blocks[j] * X.middleRows(j * bs, bs);
  if (l_dyn() > 0) {
    Y.bottomRows(l_dyn()).noalias() = boundary_first * X.topRows(bs);
    Y.bottomRows(l_dyn()).noalias() += boundary_last * X.bottomRows(bs);
  }
  return Y;
}

Eigen::MatrixXd DiscreteSystem::to_dense() const {
  return multiply(Eigen::MatrixXd(Eigen::MatrixXd::Identity(cols(), cols())));
}

DiscreteSystem assemble(const DAEProblem& problem, const Partition& partition, const BasisFamily& family,
                        const std::vector<double>& rho, WeightVariant variant, AssemblyOptions options) {
  problem.validate();
  const int N = family.N(), M = static_cast<int>(rho.size()), m = problem.m, k = problem.k;
  if (M < N + 1)
    throw std::invalid_argument("M = " + std::to_string(M) + " collocation points given; M >= N + 1 = " +
                                std::to_string(N + 1) + " is required for convergence");
  if (std::abs(partition.a() - problem.a) > 1e-14 * (1 + std::abs(problem.a)) ||
      std::abs(partition.b() - problem.b) > 1e-14 * (1 + std::abs(problem.b)))
    throw std::invalid_argument("partition does not cover the problem interval");
  for (int i = 0; i < M; ++i)
    if (rho[i] < 0.0 || rho[i] > 1.0 || (i > 0 && !(rho[i - 1] < rho[i])))
      throw std::invalid_argument("collocation nodes must be strictly increasing in [0, 1]");

  Layout layout(partition.n(), m, k, N);
  WeightMatrix W = weight_matrix(variant, rho);
  // S (x) I_m
  Eigen::MatrixXd SI = Eigen::MatrixXd::Zero(M * m, M * m);
  for (int i = 0; i < M; ++i)
    for (int l = 0; l < M; ++l)
      if (W.S(i, l) != 0.0) SI.block(i * m, l * m, m, m) = W.S(i, l) * Eigen::MatrixXd::Identity(m, m);

  const int bs = layout.block_size(), br = m * M, l_dyn = problem.l_dyn;
  DiscreteSystem sys{layout,
                     partition,
                     family,
                     rho,
                     variant,
                     1.0,
                     std::vector<Eigen::MatrixXd>(layout.n),
                     Eigen::MatrixXd::Zero(l_dyn, bs),
                     Eigen::MatrixXd::Zero(l_dyn, bs),
                     Eigen::VectorXd::Zero(layout.n * br + l_dyn),
                     ConstraintMatrix(partition, family, m, k)};

  // Basis values depend on rho only; the scaled p-bar part picks up h below.
  std::vector<Eigen::MatrixXd> om(M), dom(M);
  for (int i = 0; i < M; ++i) {
    om[i] = omega(family, layout, 1.0, rho[i]);
    dom[i] = omega_derivative(family, layout, rho[i]);
  }
  for (int j = 0; j < layout.n; ++j) {
    const double h = partition.step(j), t0 = partition.breakpoint(j);
    Eigen::MatrixXd raw(br, bs);
    Eigen::VectorXd q(br);
    for (int i = 0; i < M; ++i) {
      const double t = t0 + rho[i] * h;
      Eigen::MatrixXd Om = om[i];
      Om.leftCols(k * (N + 1)) *= h;
      Eigen::MatrixXd At = problem.A(t), Bt = problem.B(t);
      Eigen::VectorXd qt = problem.q(t);
      if (At.rows() != m || At.cols() != k || Bt.rows() != m || Bt.cols() != m || qt.size() != m)
        throw std::invalid_argument("DAE coefficient functions return wrongly sized values");
      raw.middleRows(i * m, m).noalias() = At * dom[i] + Bt * Om;
      q.segment(i * m, m) = qt;
    }
    const double rh = std::sqrt(h);
    sys.blocks[j] = rh * (SI * raw);
    sys.r.segment(j * br, br) = rh * (SI * q);
  }
  if (l_dyn > 0) {
    sys.boundary_scale =
        options.boundary_weight == BoundaryWeight::step_root ? std::sqrt(partition.max_step()) : 1.0;
    const double w = sys.boundary_scale;
    sys.boundary_first = w * problem.Ga * omega(family, layout, partition.step(0), 0.0);
    sys.boundary_last = w * problem.Gb * omega(family, layout, partition.step(layout.n - 1), 1.0);
    sys.r.tail(l_dyn) = w * problem.d;
  }
  return sys;
}

double functional_value(const DiscreteSystem& system, const CoefficientVector& c) {
  if (!(c.layout() == system.layout)) throw std::invalid_argument("functional_value: layout mismatch");
  return (system.multiply(c.values()) - system.r).squaredNorm();
}

}  // namespace lscm
