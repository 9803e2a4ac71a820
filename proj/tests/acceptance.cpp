// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lscm/constraint.hpp"
#include "lscm/experiment.hpp"
#include "lscm/problems.hpp"
#include "lscm/projection.hpp"
#include "lscm/solver.hpp"
#include "oracles.hpp"

using namespace lscm;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("%s  %2d  %s", ok ? "PASS" : "FAIL", id, title.c_str());
  if (!detail.empty()) std::printf("  [%s]", detail.c_str());
  std::printf("\n");
  if (!ok) ++failures;
}

std::string sci(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.4g", v);
  return b;
}

bool within(double v, double ref, double tol) { return std::abs(v - ref) <= tol * std::abs(ref); }

const std::vector<int> kN{3, 5, 10, 20};
const std::vector<int> kFine{10, 20, 40, 80, 160, 320};
const std::vector<std::string> kBases{"L", "mL", "Ch", "RK"};
const std::vector<std::string> kBases5{"L", "mL", "Ch", "RK", "RKu"};

std::vector<double> gauss(int M) { return collocation_nodes(M, NodeFamily::gauss_legendre); }

void criterion1() {
  const double ref[] = {3.16e-2, 1.12e-2, 3.95e-3, 1.40e-3, 4.94e-4, 1.75e-4};
  std::vector<std::string> bad;
  for (int N : kN)
    for (const auto& b : kBases)
      for (std::size_t i = 0; i < kFine.size(); ++i) {
        auto r = rep_map_conditioning(make_uniform_partition(0, 1, kFine[i]), make_basis(b, N), 2, 1);
        if (!within(r.sigma_min_Uhat, ref[i], 0.01))
          bad.push_back(b + " N=" + std::to_string(N) + " n=" + std::to_string(kFine[i]) + " got " +
                        sci(r.sigma_min_Uhat));
      }
  std::string d = std::to_string(bad.size()) + " of 96 cells off";
  for (const auto& s : bad) d += "; " + s;
  report(1, "sigma_min(Uhat) basis- and N-independent on fine grids", bad.empty(), d);
}

void criterion2() {
  auto a = rep_map_conditioning(make_uniform_partition(0, 1, 1), make_basis("mL", 20), 2, 1).sigma_min_Uhat;
  auto b = rep_map_conditioning(make_uniform_partition(0, 1, 3), make_basis("L", 10), 2, 1).sigma_min_Uhat;
  report(2, "coarse-grid sigma_min(Uhat) spot checks", within(a, 8.56e-1, 0.01) && within(b, 1.32e-1, 0.01),
         "mL N=20 n=1 " + sci(a) + ", L N=10 n=3 " + sci(b));
}

struct Cell {
  int N, n;
  double ref[5];  // L mL Ch RK RKu
};

void criterion3() {
  // sigma_min(U)
  const std::vector<Cell> smin{{3, 10, {1.17e-3, 6.83e-3, 1.35e-3, 9.81e-4, 1.93e-3}},
                               {3, 20, {4.12e-4, 2.42e-3, 4.78e-4, 3.47e-4, 6.84e-4}},
                               {5, 80, {1.99e-5, 2.10e-4, 2.23e-5, 1.31e-5, 4.43e-5}},
                               {10, 320, {5.99e-7, 1.50e-5, 6.10e-7, 2.73e-7, 1.30e-6}}};
  // sigma_max(U) = sigma_max(Uhat)
  const std::vector<Cell> smax{{3, 10, {3.16e-1, 1.57e+0, 3.41e-1, 2.19e-1, 2.64e-1}},
                               {3, 20, {2.24e-1, 1.11e+0, 2.41e-1, 1.55e-1, 1.86e-1}},
                               {5, 80, {1.12e-1, 9.51e-1, 1.20e-1, 6.15e-2, 1.40e-1}},
                               {10, 320, {5.59e-2, 1.11e+0, 6.02e-2, 2.20e-2, 6.82e-1}}};
  // kappa(Uhat). The reference for L at N=3, n=10 reads 1.03e+1, which
  // disagrees with N=5 (1.00e+1) and with 0.317/0.0316; that cell is skipped.
  const std::vector<Cell> kuh{{3, 10, {NAN, 4.98e+1, 1.08e+1, 6.95e+0, 8.35e+0}},
                              {3, 20, {2.00e+1, 9.95e+1, 2.16e+1, 1.39e+1, 1.67e+1}},
                              {5, 80, {8.00e+1, 6.81e+2, 8.62e+1, 4.40e+1, 1.00e+2}},
                              {10, 320, {3.20e+2, 6.34e+3, 3.45e+2, 1.26e+2, 3.90e+3}}};
  const std::vector<Cell> ku{{3, 10, {2.71e+2, 2.30e+2, 2.52e+2, 2.23e+2, 1.36e+2}},
                             {3, 20, {5.43e+2, 4.61e+2, 5.04e+2, 4.47e+2, 2.73e+2}},
                             {5, 80, {5.61e+3, 4.52e+3, 5.39e+3, 4.71e+3, 3.16e+3}},
                             {10, 320, {9.33e+4, 7.39e+4, 9.88e+4, 8.07e+4, 5.26e+5}}};
  std::vector<std::string> bad;
  int checked = 0;
  double worst_gap = 0.0;
  std::string worst_at;
  auto run = [&](const char* name, const std::vector<Cell>& cells, auto pick) {
    for (const auto& c : cells)
      for (int b = 0; b < 5; ++b) {
        if (std::isnan(c.ref[b])) continue;
        auto r = rep_map_conditioning(make_uniform_partition(0, 1, c.n), make_basis(kBases5[b], c.N), 2, 1);
        double v = pick(r);
        ++checked;
        if (!within(v, c.ref[b], 0.01))
          bad.push_back(std::string(name) + " " + kBases5[b] + " N=" + std::to_string(c.N) + " n=" +
                        std::to_string(c.n) + " got " + sci(v));
        double gap = std::abs(r.sigma_max_Uhat - r.sigma_max_U) / r.sigma_max_U;
        if (gap > worst_gap) {
          worst_gap = gap;
          worst_at = kBases5[b] + " N=" + std::to_string(c.N) + " n=" + std::to_string(c.n);
        }
      }
  };
  run("smin(U)", smin, [](const RepMapConditioning& r) { return r.sigma_min_U; });
  run("smax", smax, [](const RepMapConditioning& r) { return r.sigma_max_Uhat; });
  run("kappa(Uhat)", kuh, [](const RepMapConditioning& r) { return r.kappa_Uhat(); });
  run("kappa(U)", ku, [](const RepMapConditioning& r) { return r.kappa_U(); });
  bool ok = bad.empty() && worst_gap < 1e-3;
  std::string d = std::to_string(checked - bad.size()) + "/" + std::to_string(checked) +
                  " cells within 1%; max smax(Uhat)/smax(U) gap " + sci(worst_gap) + " at " + worst_at;
  for (const auto& s : bad) d += "; " + s;
  report(3, "representation-map table spot checks", ok, d);
}

void criterion4() {
  bool ok = true;
  std::ostringstream d;
  for (int N : kN) {
    auto L = build_interp_matrices(BasisFamily::legendre(N));
    Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXd>(L.gamma_root.asDiagonal() * L.V).singularValues();
    ok = ok && std::abs(s(0) - 1.0) < 1e-12 && std::abs(s(N - 1) - 1.0 / std::sqrt(2.0 * N - 1)) < 1e-12;
    auto m = build_interp_matrices(BasisFamily::modified_legendre(N));
    Eigen::VectorXd sb =
        Eigen::JacobiSVD<Eigen::MatrixXd>(m.gamma_bar_root.asDiagonal() * m.Vbar).singularValues();
    Eigen::VectorXd sa = Eigen::JacobiSVD<Eigen::MatrixXd>(m.gamma_root.asDiagonal() * m.V).singularValues();
    bool lo = sb(N) >= 1.0 / std::sqrt(2.0 * N + 1);
    bool hi = sb(0) <= std::sqrt(N + 2.0);
    bool al = sa(N - 1) >= 0.5;
    ok = ok && lo && hi && al;
    if (!lo) d << "N=" << N << " smin(GbarVbar)=" << sci(sb(N)) << " < " << sci(1.0 / std::sqrt(2.0 * N + 1)) << "; ";
  }
  report(4, "closed-form singular values and modified Legendre bounds", ok, d.str());
}

void criterion5() {
  double worst = 0.0;
  for (int N : kN)
    for (const auto& b : kBases5) {
      Eigen::VectorXd f = integral_weights_f(make_basis(b, N));
      for (int n = 2; n <= 40; ++n) {
        auto part = make_uniform_partition(0, 1, n);
        Eigen::MatrixXd T = CsCst_matrix(part, f).to_dense() * double(n) * double(n);
        Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(T).eigenvalues();
        auto cf = toeplitz_eigenvalues(f.squaredNorm(), n);
        for (int i = 0; i < n - 1; ++i) worst = std::max(worst, std::abs(cf[i] - ev(i)) / ev(n - 2));
      }
    }
  report(5, "tridiagonal Toeplitz eigenvalue formula", worst <= 1e-12, "max rel deviation " + sci(worst));
}

void criterion6() {
  bool ok = true;
  double kmax[4] = {0, 0, 0, 0};
  for (int N : kN)
    for (int n : kFine) {
      auto part = make_uniform_partition(0, 1, n);
      const double h = 1.0 / n;
      struct B {
        BasisFamily f;
        double kb, pb;
      };
      std::vector<B> list{{BasisFamily::legendre(N), std::sqrt(5.0), 1.0},
                          {BasisFamily::modified_legendre(N), std::sqrt((2.0 * N + 6) / (2.0 * N)), 1 / std::sqrt(2.0 * N)},
                          {BasisFamily::chebyshev(N), std::sqrt(4 + 2 * std::log(2.0)), 1.0},
                          {BasisFamily::runge_kutta(N, RKNodes::gauss), std::sqrt(5.0 * N), std::sqrt(double(N))}};
      for (int i = 0; i < 4; ++i) {
        auto c = constraint_conditioning(build_C(part, list[i].f, 2, 1));
        kmax[i] = std::max(kmax[i], c.kappa / list[i].kb);
        ok = ok && c.kappa <= list[i].kb * (1 + 1e-12) && c.norm_C_pinv * h <= list[i].pb * (1 + 1e-12);
      }
    }
  report(6, "constraint conditioning bounds", ok,
         "max kappa/bound L " + sci(kmax[0]) + " mL " + sci(kmax[1]) + " Ch " + sci(kmax[2]) + " RKg " + sci(kmax[3]));
}

void criterion7() {
  const int ns[] = {10, 20, 40, 80};
  const double ref[] = {6.01e4, 2.47e5, 1.00e6, 4.05e6};
  std::string found, d;
  for (double eta : {0.0, -25.0, 1.0, -2.0}) {
    auto ex = example_index3(eta);
    bool all = true;
    std::string vals;
    for (int i = 0; i < 4; ++i) {
      auto sys = assemble(ex.problem, make_uniform_partition(0, 1, ns[i]), BasisFamily::legendre(3), gauss(4),
                          WeightVariant::collocation);
      double k = kappa_C_of_A(sys);
      vals += (i ? "," : "") + sci(k);
      all = all && within(k, ref[i], 0.02);
    }
    d += "eta=" + sci(eta) + ": " + vals + "; ";
    if (all) {
      found = sci(eta);
      break;
    }
  }
  auto cm = example_campbell_moore(5.0);
  auto sys = assemble(cm.problem, make_uniform_partition(0, 5, 10), BasisFamily::legendre(3), gauss(4),
                      WeightVariant::restriction, {BoundaryWeight::step_root});
  double k3 = kappa_C_of_A(sys);
  d += "Campbell-Moore n=10 " + sci(k3);
  if (!found.empty()) d = "matched with eta=" + found + "; " + d;
  report(7, "restricted condition numbers of the benchmark systems", !found.empty() && within(k3, 4.64e2, 0.02), d);
}

void criterion8() {
  double worst_c = 0.0, worst_ne = 0.0;
  int cases = 0;
  for (const char* name : {"index3", "hessenberg2", "campbell-moore"}) {
    auto ex = make_benchmark(name);
    for (const auto& b : kBases)
      for (int n : {1, 2, 3}) {
        auto fam = make_basis(b, 3);
        auto part = make_uniform_partition(ex.problem.a, ex.problem.b, n);
        auto sys = assemble(ex.problem, part, fam, gauss(5), WeightVariant::restriction);
        if (sys.cols() > 200) continue;
        ++cases;
        auto res = solve(sys);
        Eigen::MatrixXd A = sys.to_dense(), C = sys.C.to_dense();
        Eigen::MatrixXd P = Eigen::MatrixXd::Identity(A.cols(), A.cols());
        if (C.rows() > 0) P -= oracle::pinv(C) * C;
        Eigen::VectorXd ref = P * (oracle::pinv(A * P) * sys.r);
        worst_c = std::max(worst_c, (res.c.values() - ref).norm() / ref.norm());
        Eigen::MatrixXd AD = A * nullspace_basis(sys.C).D;
        Eigen::VectorXd ne = AD.transpose() * (sys.r - A * res.c.values());
        worst_ne = std::max(worst_ne, ne.norm() / (oracle::norm2(AD) * sys.r.norm()));
      }
  }
  report(8, "nullspace solver against dense constrained least squares", worst_c <= 1e-9 && worst_ne <= 1e-10,
         std::to_string(cases) + " systems, max rel diff " + sci(worst_c) + ", max normal-eq residual " + sci(worst_ne));
}

double convergence_order(const BenchmarkProblem& ex, WeightVariant v, std::string& errs) {
  std::vector<int> ns{10, 20, 40, 80};
  std::vector<double> err;
  auto f = BasisFamily::legendre(3);
  for (int n : ns) {
    auto part = make_uniform_partition(0, 1, n);
    auto sys = assemble(ex.problem, part, f, gauss(4), v);
    err.push_back(error_H1D(solve(sys).c, ex.problem, part, f));
    errs += (errs.empty() ? "" : ",") + sci(err.back());
  }
  return fitted_order(ns, err);
}

void criterion9() {
  std::string e1, e2;
  double o1 = convergence_order(example_index3(), WeightVariant::quadrature, e1);
  double o2 = convergence_order(example_hessenberg2(), WeightVariant::quadrature, e2);
  report(9, "observed convergence orders", o1 >= 0.7 && o2 >= 1.7,
         "index-3 order " + sci(o1) + " (" + e1 + "), index-2 order " + sci(o2) + " (" + e2 + ")");
}

void criterion10() {
  double before_dev = 0.0, after = 0.0;
  for (int N : kN)
    for (const auto& b : kBases5)
      for (int n : kFine) {
        auto part = make_uniform_partition(0, 1, n);
        auto f = make_basis(b, N);
        std::vector<IntervalSamples> s(n);
        for (int j = 0; j < n; ++j) {
          s[j].differential = Eigen::MatrixXd::Constant(N + 1, 1, j % 2 == 0 ? 1.0 : 0.0);
          s[j].algebraic = Eigen::MatrixXd::Zero(N, 1);
        }
        auto xp = coefficients_from_function(s, part, f, 2, 1);
        before_dev = std::max(before_dev, std::abs(max_jump(xp, part, f) - 1.0));
        ProjectionContext ctx(part, f, 2, 1);
        after = std::max(after, max_jump(project_coefficients(xp, ctx), part, f));
      }
  report(10, "projection of the alternating step function", before_dev <= 1e-12 && after <= 1e-12,
         "jump before 1 +- " + sci(before_dev) + ", max jump after " + sci(after));
}

void criterion11() {
  std::mt19937 rng(101);
  double worst = 0.0;
  for (const char* name : {"index3", "hessenberg2", "campbell-moore"}) {
    auto ex = make_benchmark(name);
    for (const auto& b : kBases)
      for (int N : {3, 5, 10}) {
        auto f = make_basis(b, N);
        auto part = make_uniform_partition(ex.problem.a, ex.problem.b, 5);
        auto I = assemble(ex.problem, part, f, gauss(N + 1), WeightVariant::quadrature);
        auto R = assemble(ex.problem, part, f, gauss(N + 1), WeightVariant::restriction);
        for (int t = 0; t < 5; ++t) {
          CoefficientVector c(I.layout, oracle::random_vector(rng, I.cols()));
          worst = std::max(worst, oracle::rel_close(functional_value(I, c), functional_value(R, c)));
        }
      }
  }
  report(11, "functional variants I and R agree at Gauss nodes", worst <= 1e-10, "max rel diff " + sci(worst));
}

void criterion12() {
  double worst = 0.0;
  for (int N : kN)
    for (const auto& b : kBases5) {
      auto f = make_basis(b, N);
      auto a = build_interp_matrices(f);
      auto c = build_interp_matrices(f, gauss_legendre(N + 2), gauss_legendre(N + 1));
      Layout layout(1, 2, 1, N);
      for (double h : {1.0, 0.1, 0.01}) {
        for (bool h1 : {false, true}) {
          Eigen::MatrixXd Ua = h1 ? interval_factor_H1(a, layout, h) : interval_factor_L2(a, layout, h);
          Eigen::MatrixXd Uc = h1 ? interval_factor_H1(c, layout, h) : interval_factor_L2(c, layout, h);
          Eigen::MatrixXd Ga = Ua.transpose() * Ua, Gc = Uc.transpose() * Uc;
          worst = std::max(worst, (Ga - Gc).cwiseAbs().maxCoeff() / std::max(1.0, Ga.cwiseAbs().maxCoeff()));
        }
      }
    }
  report(12, "Gram matrices independent of the quadrature nodes", worst <= 1e-12, "max deviation " + sci(worst));
}

void criterion13() {
  std::mt19937 rng(7);
  auto ex = example_index3();
  auto sys = assemble(ex.problem, make_uniform_partition(0, 1, 4), BasisFamily::legendre(3), gauss(4),
                      WeightVariant::restriction);
  Eigen::MatrixXd A = sys.to_dense(), C = sys.C.to_dense();
  Eigen::VectorXd r = sys.r;
  Eigen::MatrixXd D = nullspace_basis(sys.C).D, P = D * D.transpose();
  auto cls = [](const Eigen::MatrixXd& A, const Eigen::VectorXd& r, const Eigen::MatrixXd& C) {
    Eigen::MatrixXd P = Eigen::MatrixXd::Identity(A.cols(), A.cols()) - oracle::pinv(C) * C;
    return Eigen::VectorXd(P * (oracle::pinv(A * P) * r));
  };
  Eigen::VectorXd c = cls(A, r, C);
  const double nAP = oracle::norm2(A * P), nAPp = oracle::norm2(oracle::pinv(A * P)), rres = (r - A * c).norm();
  const double nCp = oracle::norm2(oracle::pinv(C)), kC = oracle::norm2(C) * nCp, nA = oracle::norm2(A);
  int fixed_ok = 0, pert_ok = 0, trials = 25;
  double worst_ratio = 0.0;
  for (int t = 0; t < trials; ++t) {
    double scale = std::pow(10.0, -2.0 - 0.25 * (t % 12)) / nAPp;
    Eigen::MatrixXd dA = oracle::random_matrix(rng, A.rows(), A.cols());
    dA *= scale / oracle::norm2(dA);
    Eigen::VectorXd dr = oracle::random_vector(rng, r.size());
    dr *= 1e-4 * (1 + t % 5) * r.norm() / dr.norm();
    FixedKernelInputs in{nAPp, oracle::norm2(dA * P), nAP, c.norm(), r.norm(), rres, dr.norm()};
    auto b = perturbation_bound_fixed_kernel(in);
    double d1 = (cls(A + dA, r + dr, C) - c).norm();
    if (d1 <= b.absolute && d1 / c.norm() <= *b.relative) ++fixed_ok;
    worst_ratio = std::max(worst_ratio, d1 / b.absolute);

    Eigen::MatrixXd dC = oracle::random_matrix(rng, C.rows(), C.cols());
    dC *= 1e-2 * scale / (nCp * nA * (std::sqrt(2.0) * kC + 1)) / oracle::norm2(dC);
    PerturbedKernelInputs pin{nCp, oracle::norm2(dC), kC, oracle::norm2(A + dA), in};
    auto bp = perturbation_bound_perturbed_kernel(pin);
    double d2 = (cls(A + dA, r + dr, C + dC) - c).norm();
    if (d2 <= bp.absolute && d2 / c.norm() <= *bp.relative) ++pert_ok;
    worst_ratio = std::max(worst_ratio, d2 / bp.absolute);
  }
  report(13, "perturbation bounds hold under random perturbations", fixed_ok == trials && pert_ok == trials,
         "fixed kernel " + std::to_string(fixed_ok) + "/" + std::to_string(trials) + ", perturbed kernel " +
             std::to_string(pert_ok) + "/" + std::to_string(trials) + ", max |dc|/bound " + sci(worst_ratio));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  criterion13();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
