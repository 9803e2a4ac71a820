#pragma once

#include <map>
#include <string>

#include "lscm/assembly.hpp"
#include "lscm/basis.hpp"
#include "lscm/mesh.hpp"
#include "lscm/repmap.hpp"

namespace lscm {

struct BenchmarkProblem {
  std::string name;
  DAEProblem problem;
  std::map<std::string, double> parameters;
};

/// Index-3 system on [0, 1] without dynamic degrees of freedom (m=3, k=2):
///   x2' + x1 = q1,  t eta x2' + x3' + (eta + 1) x2 = q2,  t eta x2 + x3 = q3,
/// exact solution x1 = e^{-t} sin t, x2 = e^{-2t} sin t, x3 = e^{-t} cos t.
/// Unknowns are ordered (x2, x3, x1) so that D = [I 0] picks the
/// differentiated components.
BenchmarkProblem example_index3(double eta = 0.0);

/// Hessenberg index-2 system on [0, 1] (m=3, k=2) with x1(0) = 0.
BenchmarkProblem example_hessenberg2(double eta = -25.0, double lambda = -1.0);

/// Linearized robot-arm type index-3 system on [0, 5] (m=7, k=6, l_dyn=4).
BenchmarkProblem example_campbell_moore(double rho = 5.0);

/// Builds a benchmark by name: "index3", "hessenberg2" or "campbell-moore",
/// taking parameters eta, lambda, rho from `params` when present.
BenchmarkProblem make_benchmark(const std::string& name, const std::map<std::string, double>& params = {});

/// Broken H1_D error of R c against the exact solution: per interval Gauss
/// quadrature with N+3 points of |x - x*|^2 + |(Dx)' - (Dx*)'|^2.
double error_H1D(const CoefficientVector& c, const DAEProblem& problem, const Partition& partition,
                 const BasisFamily& family);

}  // namespace lscm
