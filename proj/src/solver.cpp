#include "lscm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lscm/errors.hpp"

namespace lscm {

SolveResult solve(const DiscreteSystem& system) { return solve(system, nullspace_basis(system.C)); }

SolveResult solve(const DiscreteSystem& system, const NullspaceBasis& kernel) {
  if (kernel.D.rows() != system.cols()) throw std::invalid_argument("solve: kernel basis has wrong row count");
  Eigen::MatrixXd AD = system.multiply(kernel.D);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(AD, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double smax = s(0), smin = s(s.size() - 1);
  const double tol = std::numeric_limits<double>::epsilon() * static_cast<double>(std::max(AD.rows(), AD.cols()));
  if (AD.rows() < AD.cols() || !(smin > tol * smax))
    throw NumericError("compressed system A D is rank deficient (inadmissible discretization?)");
  SolveResult res;
  res.d = svd.matrixV() * (svd.matrixU().transpose() * system.r).cwiseQuotient(s);
  res.c = CoefficientVector(system.layout, kernel.D * res.d);
  res.residual_norm = (system.r - system.multiply(res.c.values())).norm();
  res.sigma_max = smax;
  res.sigma_min = smin;
  res.kappa = smax / smin;
  return res;
}

double kappa_C_of_A(const DiscreteSystem& system) {
  Eigen::MatrixXd AD = system.multiply(nullspace_basis(system.C).D);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(AD);
  const Eigen::VectorXd& s = svd.singularValues();
  const double tol = std::numeric_limits<double>::epsilon() * static_cast<double>(std::max(AD.rows(), AD.cols()));
  if (AD.rows() < AD.cols() || !(s(s.size() - 1) > tol * s(0)))
    throw NumericError("compressed system A D is rank deficient (inadmissible discretization?)");
  return s(0) / s(s.size() - 1);
}

namespace {

PerturbationBound evaluate_bound(const FixedKernelInputs& in, double R, double omega, double drift) {
  const double kappa = in.norm_AP * in.norm_ApPlus;
  PerturbationBound b;
  b.omega = omega;
  b.R_bound = R;
  b.drift = drift;
  b.absolute = in.norm_ApPlus / (1.0 - omega) * (R * (in.c_norm + in.norm_ApPlus * in.rres_norm) + in.dr_norm) +
               drift * in.c_norm;
  if (in.r_norm > 0.0 && in.c_norm > 0.0 && in.norm_AP > 0.0) {
    double rel = ((kappa + in.rres_norm / (in.norm_AP * in.c_norm) * kappa * kappa) * R / in.norm_AP +
                  in.norm_ApPlus * in.r_norm / in.c_norm * in.dr_norm / in.r_norm) /
                 (1.0 - omega);
    b.relative = rel + drift;
  }
  return b;
}

}  // namespace

PerturbationBound perturbation_bound_fixed_kernel(const FixedKernelInputs& in) {
  const double omega = in.norm_ApPlus * in.norm_DeltaAP;
  if (!(omega < 1.0))
    throw std::domain_error("perturbation bound undefined: omega = " + std::to_string(omega) + " >= 1");
  return evaluate_bound(in, in.norm_DeltaAP, omega, 0.0);
}

PerturbationBound perturbation_bound_perturbed_kernel(const PerturbedKernelInputs& in) {
  const double varkappa = in.norm_Cplus * in.norm_DeltaC;
  if (!(varkappa < 0.5))
    throw std::domain_error("perturbation bound undefined: ||C^+|| ||Delta C|| = " + std::to_string(varkappa) +
                            " is not below 1/2");
  const double drift = in.norm_Cplus / (1.0 - varkappa) * (std::sqrt(2.0) * in.kappa_C + 1.0) * in.norm_DeltaC;
  const double R = in.base.norm_DeltaAP + in.norm_A_plus_DeltaA * drift;
  const double omega = in.base.norm_ApPlus * R;
  if (!(omega < 1.0))
    throw std::domain_error("perturbation bound undefined: omega_Delta = " + std::to_string(omega) + " >= 1");
  PerturbationBound b = evaluate_bound(in.base, R, omega, drift);
  b.varkappa = varkappa;
  return b;
}

}  // namespace lscm
