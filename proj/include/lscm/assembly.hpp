#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "lscm/basis.hpp"
#include "lscm/constraint.hpp"
#include "lscm/mesh.hpp"
#include "lscm/quadrature.hpp"
#include "lscm/repmap.hpp"

namespace lscm {

/// Linear DAE A(t) (Dx)'(t) + B(t) x(t) = q(t) on [a, b] with D = [I_k 0] and
/// boundary conditions G_a x(a) + G_b x(b) = d.
struct DAEProblem {
  double a = 0.0;
  double b = 1.0;
  int m = 0;
  int k = 0;
  int l_dyn = 0;
  int index = 1;
  std::function<Eigen::MatrixXd(double)> A;  // m x k
  std::function<Eigen::MatrixXd(double)> B;  // m x m
  std::function<Eigen::VectorXd(double)> q;  // m
  Eigen::MatrixXd Ga;                        // l_dyn x m
  Eigen::MatrixXd Gb;                        // l_dyn x m
  Eigen::VectorXd d;                         // l_dyn
  // Optional exact solution, used for error studies.
  std::function<Eigen::VectorXd(double)> x_exact;
  std::function<Eigen::VectorXd(double)> Dx_exact_derivative;

  /// Throws std::invalid_argument on inconsistent sizes or structure.
  void validate() const;
};

/// Weight of the boundary rows relative to the unscaled term of the functional.
/// step_root multiplies them by sqrt(h) with h the largest stepsize, giving
/// them the same scale as the collocation rows on uniform grids.
enum class BoundaryWeight { unit, step_root };

struct AssemblyOptions {
  BoundaryWeight boundary_weight = BoundaryWeight::unit;
};

/// Least-squares system |A c - r|^2 subject to C c = 0. A is kept as n dense
/// interval blocks (mM x (mN+k)) plus boundary rows touching the first and
/// last interval.
struct DiscreteSystem {
  Layout layout;
  Partition partition;
  BasisFamily family;
  std::vector<double> rho;
  WeightVariant variant;
  double boundary_scale = 1.0;
  std::vector<Eigen::MatrixXd> blocks;
  Eigen::MatrixXd boundary_first;
  Eigen::MatrixXd boundary_last;
  Eigen::VectorXd r;
  ConstraintMatrix C;

  int M() const { return static_cast<int>(rho.size()); }
  int l_dyn() const { return static_cast<int>(boundary_first.rows()); }
  int rows() const { return layout.n * layout.m * M() + l_dyn(); }
  int cols() const { return layout.size(); }

  Eigen::VectorXd multiply(const Eigen::VectorXd& c) const;
  /// A X for a dense X with cols() rows.
  Eigen::MatrixXd multiply(const Eigen::MatrixXd& X) const;
  Eigen::MatrixXd to_dense() const;
};

DiscreteSystem assemble(const DAEProblem& problem, const Partition& partition, const BasisFamily& family,
                        const std::vector<double>& rho, WeightVariant variant, AssemblyOptions options = {});

/// |A c - r|^2.
double functional_value(const DiscreteSystem& system, const CoefficientVector& c);

}  // namespace lscm
