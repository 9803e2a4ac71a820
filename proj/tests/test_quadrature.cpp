#include <doctest.h>

#include <cmath>
#include <random>

#include "lscm/quadrature.hpp"
#include "oracles.hpp"

using namespace lscm;

TEST_CASE("gauss_legendre small rules") {
  auto g1 = gauss_legendre(1);
  CHECK(g1.nodes[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(g1.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

  // Roots of P_2(2t-1): independent oracle.
  std::vector<double> x, w;
  oracle::gauss(2, x, w);
  auto g2 = gauss_legendre(2);
  for (int i = 0; i < 2; ++i) {
    CHECK(std::abs(g2.nodes[i] - x[i]) < 1e-15);
    CHECK(std::abs(g2.weights[i] - 0.5) < 1e-15);
  }
  CHECK(std::abs(g2.nodes[0] - (0.5 - 0.5 / std::sqrt(3.0))) < 1e-15);
}

TEST_CASE("gauss_legendre exactness, positivity and symmetry") {
  for (int count : {1, 2, 3, 4, 7, 12, 21, 31}) {
    auto g = gauss_legendre(count);
    CHECK(g.exactness_degree == 2 * count - 1);
    double sum = 0.0;
    for (int i = 0; i < count; ++i) {
      CHECK(g.weights[i] > 0.0);
      if (i > 0) CHECK(g.nodes[i - 1] < g.nodes[i]);
      CHECK(std::abs(g.nodes[i] + g.nodes[count - 1 - i] - 1.0) < 1e-15);
      sum += g.weights[i];
    }
    CHECK(std::abs(sum - 1.0) < 1e-14);
    for (int d = 0; d <= 2 * count - 1; ++d) {
      double s = 0.0;
      for (int i = 0; i < count; ++i) s += g.weights[i] * std::pow(g.nodes[i], d);
      CHECK(std::abs(s - 1.0 / (d + 1)) < 1e-12);
    }
    std::vector<double> x, w;
    oracle::gauss(count, x, w);
    for (int i = 0; i < count; ++i) {
      CHECK(std::abs(g.nodes[i] - x[i]) < 1e-14);
      CHECK(std::abs(g.weights[i] - w[i]) < 1e-14);
    }
  }
  auto g4 = gauss_legendre(4);
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += g4.weights[i] * std::pow(g4.nodes[i], 7);
  CHECK(std::abs(s - 0.125) < 1e-14);
}

TEST_CASE("collocation nodes") {
  auto rho = collocation_nodes(4, NodeFamily::gauss_legendre);
  REQUIRE(rho.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(rho[i] > 0.0);
    CHECK(rho[i] < 1.0);
    CHECK(std::abs(rho[i] + rho[3 - i] - 1.0) < 1e-15);
  }
  auto u = collocation_nodes(3, NodeFamily::uniform);
  CHECK(u == std::vector<double>{0.0, 0.5, 1.0});
  CHECK_THROWS_AS(collocation_nodes(1, NodeFamily::uniform), std::invalid_argument);
}

TEST_CASE("weight matrices") {
  auto rho = collocation_nodes(4, NodeFamily::gauss_legendre);
  auto C = weight_matrix(WeightVariant::collocation, rho);
  CHECK((C.L - 0.25 * Eigen::MatrixXd::Identity(4, 4)).norm() == 0.0);
  auto I = weight_matrix(WeightVariant::quadrature, rho);
  CHECK(std::abs(I.L.trace() - 1.0) < 1e-14);
  auto g = gauss_legendre(4);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(I.L(i, i) - g.weights[i]) < 1e-14);
  CHECK((I.L - Eigen::MatrixXd(I.L.diagonal().asDiagonal())).norm() == 0.0);

  for (auto v : {WeightVariant::collocation, WeightVariant::quadrature, WeightVariant::restriction}) {
    auto W = weight_matrix(v, rho);
    CHECK((W.L - W.L.transpose()).norm() <= 1e-14 * W.L.norm());
    CHECK((W.S.transpose() * W.S - W.L).norm() <= 1e-13 * W.L.norm());
    Eigen::LLT<Eigen::MatrixXd> llt(W.L);
    CHECK(llt.info() == Eigen::Success);
  }
}

TEST_CASE("restriction weights integrate the interpolant exactly") {
  std::mt19937 rng(7);
  for (int M : {2, 4, 6}) {
    for (auto family : {NodeFamily::gauss_legendre, NodeFamily::uniform}) {
      auto rho = collocation_nodes(M, family);
      auto R = weight_matrix(WeightVariant::restriction, rho);
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> coef(M);
        for (auto& c : coef) c = std::normal_distribution<double>()(rng);
        Eigen::VectorXd W(M);
        for (int i = 0; i < M; ++i) W(i) = oracle::polyval(coef, rho[i]);
        double exact = oracle::integrate([&](double t) { double v = oracle::polyval(coef, t); return v * v; }, 0, 1);
        CHECK(std::abs(W.dot(R.L * W) - exact) <= 1e-12 * std::max(1.0, exact));
      }
    }
  }
}

TEST_CASE("restriction equals quadrature at Gauss nodes for polynomial data") {
  std::mt19937 rng(11);
  for (int M : {1, 3, 4, 6, 11, 21}) {
    auto rho = collocation_nodes(M, NodeFamily::gauss_legendre);
    auto I = weight_matrix(WeightVariant::quadrature, rho);
    auto R = weight_matrix(WeightVariant::restriction, rho);
    CHECK((I.L - R.L).norm() <= 1e-12 * I.L.norm());
    Eigen::VectorXd W = oracle::random_vector(rng, M);
    CHECK(std::abs(W.dot(I.L * W) - W.dot(R.L * W)) <= 1e-12 * W.dot(I.L * W));
  }
}

TEST_CASE("weight matrix errors") {
  CHECK_THROWS_AS(weight_matrix(WeightVariant::restriction, {0.1, 0.1, 0.5}), std::invalid_argument);
  // Uniform nodes with M = 9 give negative Newton-Cotes weights.
  CHECK_THROWS_AS(weight_matrix(WeightVariant::quadrature, collocation_nodes(9, NodeFamily::uniform)),
                  std::invalid_argument);
  CHECK(parse_weight_variant("r") == WeightVariant::restriction);
  CHECK_THROWS_AS(parse_weight_variant("X"), std::invalid_argument);
}
