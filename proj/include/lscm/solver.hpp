#pragma once

#include <Eigen/Dense>
#include <optional>

#include "lscm/assembly.hpp"
#include "lscm/constraint.hpp"
#include "lscm/repmap.hpp"

namespace lscm {

struct SolveResult {
  CoefficientVector c;
  /// Coordinates of c in the kernel basis used: c = D d.
  Eigen::VectorXd d;
  /// |r - A c|.
  double residual_norm = 0.0;
  /// Restricted condition number sigma_max(A D) / sigma_min(A D).
  double kappa = 0.0;
  double sigma_max = 0.0;
  double sigma_min = 0.0;
};

/// Nullspace method: minimize |A D d - r| over d, then c = D d. Throws
/// NumericError if A D is numerically rank deficient.
SolveResult solve(const DiscreteSystem& system);
SolveResult solve(const DiscreteSystem& system, const NullspaceBasis& kernel);

double kappa_C_of_A(const DiscreteSystem& system);

/// Bounds for the fixed-kernel case (C unperturbed). Norms are inputs so the
/// same routine serves as a formula evaluator and as a diagnostic.
struct FixedKernelInputs {
  double norm_ApPlus = 0.0;   // ||(A P)^+||
  double norm_DeltaAP = 0.0;  // ||Delta A P||
  double norm_AP = 0.0;       // ||A P||
  double c_norm = 0.0;        // |c|
  double r_norm = 0.0;        // |r|
  double rres_norm = 0.0;     // |r - A c|
  double dr_norm = 0.0;       // |Delta r|
};

struct PerturbationBound {
  double absolute = 0.0;
  /// Empty when |r| = 0 or |c| = 0.
  std::optional<double> relative;
  double omega = 0.0;
  // Perturbed-kernel extras (zero in the fixed-kernel case).
  double varkappa = 0.0;
  double R_bound = 0.0;
  double drift = 0.0;
};

/// Throws std::domain_error if omega = ||(AP)^+|| ||Delta A P|| >= 1.
PerturbationBound perturbation_bound_fixed_kernel(const FixedKernelInputs& in);

struct PerturbedKernelInputs {
  double norm_Cplus = 0.0;          // ||C^+||
  double norm_DeltaC = 0.0;         // ||Delta C||
  double kappa_C = 0.0;             // kappa(C)
  double norm_A_plus_DeltaA = 0.0;  // ||A + Delta A||
  FixedKernelInputs base;
};

/// Throws std::domain_error naming the violated precondition when
/// ||C^+|| ||Delta C|| >= 1/2 or omega_Delta >= 1.
PerturbationBound perturbation_bound_perturbed_kernel(const PerturbedKernelInputs& in);

}  // namespace lscm
