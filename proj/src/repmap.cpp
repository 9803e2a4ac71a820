#include "lscm/repmap.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace lscm {

Layout::Layout(int n_, int m_, int k_, int N_) : n(n_), m(m_), k(k_), N(N_) {
  if (n < 1) throw std::invalid_argument("layout: n must be at least 1");
  if (N < 1) throw std::invalid_argument("layout: N must be at least 1");
  if (!(0 < k && k < m)) throw std::invalid_argument("layout: need 0 < k < m");
}

int Layout::offset(int j, int kappa) const {
  int base = j * block_size();
  return kappa < k ? base + kappa * (N + 1) : base + k * (N + 1) + (kappa - k) * N;
}

CoefficientVector::CoefficientVector(const Layout& layout)
    : layout_(layout), data_(Eigen::VectorXd::Zero(layout.size())) {}

CoefficientVector::CoefficientVector(const Layout& layout, Eigen::VectorXd values)
    : layout_(layout), data_(std::move(values)) {
  if (data_.size() != layout_.size()) throw std::invalid_argument("coefficient vector length does not match layout");
}

Eigen::Ref<const Eigen::VectorXd> CoefficientVector::component(int j, int kappa) const {
  return data_.segment(layout_.offset(j, kappa), layout_.component_length(kappa));
}
Eigen::Ref<Eigen::VectorXd> CoefficientVector::component(int j, int kappa) {
  return data_.segment(layout_.offset(j, kappa), layout_.component_length(kappa));
}
Eigen::Ref<const Eigen::VectorXd> CoefficientVector::block(int j) const {
  return data_.segment(j * layout_.block_size(), layout_.block_size());
}
Eigen::Ref<Eigen::VectorXd> CoefficientVector::block(int j) {
  return data_.segment(j * layout_.block_size(), layout_.block_size());
}

InterpolationMatrices build_interp_matrices(const BasisFamily& family) {
  return build_interp_matrices(family, gauss_legendre(family.N() + 1), gauss_legendre(family.N()));
}

InterpolationMatrices build_interp_matrices(const BasisFamily& family, const QuadratureRule& bar_rule,
                                            const QuadratureRule& rule) {
  const int N = family.N();
  if (bar_rule.exactness_degree < 2 * N || rule.exactness_degree < 2 * N - 2)
    throw std::invalid_argument("interpolation rules are not exact enough for the Gram identities");
  InterpolationMatrices im;
  const int nb = static_cast<int>(bar_rule.nodes.size());
  const int ns = static_cast<int>(rule.nodes.size());
  im.Vbar.resize(nb, N + 1);
  im.Vring = Eigen::MatrixXd::Zero(nb, N + 1);
  im.V.resize(ns, N);
  im.gamma_bar_root.resize(nb);
  im.gamma_root.resize(ns);
  for (int i = 0; i < nb; ++i) {
    double s = bar_rule.nodes[i];
    im.Vbar.row(i) = family.pbar_all(s).transpose();
    im.Vring.row(i).tail(N) = family.p_all(s).transpose();
    im.gamma_bar_root(i) = std::sqrt(bar_rule.weights[i]);
  }
  for (int i = 0; i < ns; ++i) {
    im.V.row(i) = family.p_all(rule.nodes[i]).transpose();
    im.gamma_root(i) = std::sqrt(rule.weights[i]);
  }
  im.sigma_bar = bar_rule.nodes;
  im.sigma = rule.nodes;
  return im;
}

Eigen::MatrixXd omega(const BasisFamily& family, const Layout& layout, double h, double tau) {
  const int N = layout.N;
  Eigen::MatrixXd O = Eigen::MatrixXd::Zero(layout.m, layout.block_size());
  Eigen::VectorXd pb = family.pbar_all(tau);
  Eigen::VectorXd p = family.p_all(tau);
  for (int kappa = 0; kappa < layout.m; ++kappa) {
    int off = layout.offset(0, kappa);
    if (kappa < layout.k)
      O.row(kappa).segment(off, N + 1) = h * pb.transpose();
    else
      O.row(kappa).segment(off, N) = p.transpose();
  }
  return O;
}

Eigen::MatrixXd omega_derivative(const BasisFamily& family, const Layout& layout, double tau) {
  const int N = layout.N;
  Eigen::MatrixXd O = Eigen::MatrixXd::Zero(layout.k, layout.block_size());
  Eigen::VectorXd p = family.p_all(tau);
  for (int kappa = 0; kappa < layout.k; ++kappa)
    O.row(kappa).segment(layout.offset(0, kappa) + 1, N) = p.transpose();
  return O;
}

namespace {

Eigen::MatrixXd block_diag_factor(const Layout& layout, const Eigen::MatrixXd& diff, const Eigen::MatrixXd& alg) {
  const int rows = layout.k * diff.rows() + (layout.m - layout.k) * alg.rows();
  Eigen::MatrixXd U = Eigen::MatrixXd::Zero(rows, layout.block_size());
  int r = 0;
  for (int kappa = 0; kappa < layout.m; ++kappa) {
    const Eigen::MatrixXd& B = kappa < layout.k ? diff : alg;
    U.block(r, layout.offset(0, kappa), B.rows(), B.cols()) = B;
    r += B.rows();
  }
  return U;
}

Eigen::MatrixXd weighted(const Eigen::VectorXd& root, const Eigen::MatrixXd& X) { return root.asDiagonal() * X; }

}  // namespace

Eigen::MatrixXd interval_factor_L2(const InterpolationMatrices& mats, const Layout& layout, double h) {
  Eigen::MatrixXd diff = std::pow(h, 1.5) * weighted(mats.gamma_bar_root, mats.Vbar);
  Eigen::MatrixXd alg = std::sqrt(h) * weighted(mats.gamma_root, mats.V);
  return block_diag_factor(layout, diff, alg);
}

Eigen::MatrixXd interval_factor_H1(const InterpolationMatrices& mats, const Layout& layout, double h) {
  const Eigen::Index nb = mats.Vbar.rows();
  Eigen::MatrixXd diff(2 * nb, mats.Vbar.cols());
  diff.topRows(nb) = std::pow(h, 1.5) * weighted(mats.gamma_bar_root, mats.Vbar);
  diff.bottomRows(nb) = std::sqrt(h) * weighted(mats.gamma_bar_root, mats.Vring);
  Eigen::MatrixXd alg = std::sqrt(h) * weighted(mats.gamma_root, mats.V);
  return block_diag_factor(layout, diff, alg);
}

Eigen::VectorXd evaluate_on_interval(const CoefficientVector& c, const Partition& partition,
                                     const BasisFamily& family, int j, double tau) {
  return omega(family, c.layout(), partition.step(j), tau) * c.block(j);
}

Eigen::VectorXd evaluate_Dx_on_interval(const CoefficientVector& c, const Partition&, const BasisFamily& family,
                                        int j, double tau) {
  return omega_derivative(family, c.layout(), tau) * c.block(j);
}

namespace {

void check_compatible(const CoefficientVector& c, const Partition& partition, const BasisFamily& family) {
  if (c.layout().n != partition.n() || c.layout().N != family.N())
    throw std::invalid_argument("coefficient layout does not match partition or basis");
}

}  // namespace

Eigen::VectorXd evaluate(const CoefficientVector& c, const Partition& partition, const BasisFamily& family,
                         double t) {
  check_compatible(c, partition, family);
  int j = partition.locate(t);
  double tau = (t - partition.breakpoint(j)) / partition.step(j);
  return evaluate_on_interval(c, partition, family, j, tau);
}

Eigen::VectorXd evaluate_Dx_derivative(const CoefficientVector& c, const Partition& partition,
                                       const BasisFamily& family, double t) {
  check_compatible(c, partition, family);
  int j = partition.locate(t);
  double tau = (t - partition.breakpoint(j)) / partition.step(j);
  return evaluate_Dx_on_interval(c, partition, family, j, tau);
}

CoefficientVector coefficients_from_function(const std::vector<IntervalSamples>& samples,
                                             const Partition& partition, const BasisFamily& family, int m, int k) {
  Layout layout(partition.n(), m, k, family.N());
  if (static_cast<int>(samples.size()) != layout.n)
    throw std::invalid_argument("one sample set per interval is required");
  const int N = layout.N;
  InterpolationMatrices mats = build_interp_matrices(family);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_bar(mats.Vbar), lu(mats.V);
  CoefficientVector c(layout);
  for (int j = 0; j < layout.n; ++j) {
    const auto& s = samples[j];
    if (s.differential.rows() != N + 1 || s.differential.cols() != k || s.algebraic.rows() != N ||
        s.algebraic.cols() != m - k)
      throw std::invalid_argument("sample matrix shape mismatch");
    double h = partition.step(j);
    for (int kappa = 0; kappa < k; ++kappa) c.component(j, kappa) = lu_bar.solve(s.differential.col(kappa) / h);
    for (int kappa = k; kappa < m; ++kappa) c.component(j, kappa) = lu.solve(s.algebraic.col(kappa - k));
  }
  return c;
}

CoefficientVector interpolate(const std::function<Eigen::VectorXd(double)>& x, const Partition& partition,
                              const BasisFamily& family, int m, int k) {
  const int N = family.N();
  auto bar = gauss_legendre(N + 1);
  auto plain = gauss_legendre(N);
  std::vector<IntervalSamples> samples(partition.n());
  for (int j = 0; j < partition.n(); ++j) {
    double t0 = partition.breakpoint(j), h = partition.step(j);
    samples[j].differential.resize(N + 1, k);
    samples[j].algebraic.resize(N, m - k);
    for (int i = 0; i <= N; ++i) {
      Eigen::VectorXd v = x(t0 + bar.nodes[i] * h);
      samples[j].differential.row(i) = v.head(k).transpose();
    }
    for (int i = 0; i < N; ++i) {
      Eigen::VectorXd v = x(t0 + plain.nodes[i] * h);
      samples[j].algebraic.row(i) = v.tail(m - k).transpose();
    }
  }
  return coefficients_from_function(samples, partition, family, m, k);
}

double norm_L2(const CoefficientVector& c, const Partition& partition, const BasisFamily& family) {
  check_compatible(c, partition, family);
  InterpolationMatrices mats = build_interp_matrices(family);
  double s = 0.0;
  for (int j = 0; j < partition.n(); ++j)
    s += (interval_factor_L2(mats, c.layout(), partition.step(j)) * c.block(j)).squaredNorm();
  return std::sqrt(s);
}

double norm_H1Dpi(const CoefficientVector& c, const Partition& partition, const BasisFamily& family) {
  check_compatible(c, partition, family);
  InterpolationMatrices mats = build_interp_matrices(family);
  double s = 0.0;
  for (int j = 0; j < partition.n(); ++j)
    s += (interval_factor_H1(mats, c.layout(), partition.step(j)) * c.block(j)).squaredNorm();
  return std::sqrt(s);
}

RepMapConditioning rep_map_conditioning(const Partition& partition, const BasisFamily& family, int m, int k) {
  Layout layout(partition.n(), m, k, family.N());
  InterpolationMatrices mats = build_interp_matrices(family);
  auto sv = [](const Eigen::MatrixXd& X) { return Eigen::JacobiSVD<Eigen::MatrixXd>(X).singularValues(); };
  Eigen::VectorXd s_bar = sv(weighted(mats.gamma_bar_root, mats.Vbar));
  Eigen::VectorXd s_alg = sv(weighted(mats.gamma_root, mats.V));
  const Eigen::Index nb = mats.Vbar.rows();

  // Uhat's differential block [h Gbar Vbar; Gbar Vring] depends on h only.
  std::map<double, Eigen::VectorXd> red_cache;
  RepMapConditioning r;
  r.sigma_min_U = r.sigma_min_Uhat = INFINITY;
  for (int j = 0; j < partition.n(); ++j) {
    double h = partition.step(j);
    auto it = red_cache.find(h);
    if (it == red_cache.end()) {
      Eigen::MatrixXd red(2 * nb, mats.Vbar.cols());
      red.topRows(nb) = h * weighted(mats.gamma_bar_root, mats.Vbar);
      red.bottomRows(nb) = weighted(mats.gamma_bar_root, mats.Vring);
      it = red_cache.emplace(h, sv(red)).first;
    }
    const Eigen::VectorXd& s_red = it->second;
    double rh = std::sqrt(h);
    // k >= 1 and m - k >= 1 are guaranteed by the layout.
    double umin = std::min(std::pow(h, 1.5) * s_bar.minCoeff(), rh * s_alg.minCoeff());
    double umax = std::max(std::pow(h, 1.5) * s_bar.maxCoeff(), rh * s_alg.maxCoeff());
    double hmin = std::min(rh * s_red.minCoeff(), rh * s_alg.minCoeff());
    double hmax = std::max(rh * s_red.maxCoeff(), rh * s_alg.maxCoeff());
    r.sigma_min_U = std::min(r.sigma_min_U, umin);
    r.sigma_max_U = std::max(r.sigma_max_U, umax);
    r.sigma_min_Uhat = std::min(r.sigma_min_Uhat, hmin);
    r.sigma_max_Uhat = std::max(r.sigma_max_Uhat, hmax);
  }
  return r;
}

}  // namespace lscm
