#include <doctest.h>

#include <stdexcept>

#include "lscm/mesh.hpp"

using namespace lscm;

TEST_CASE("uniform partition of [0,1] into ten intervals") {
  auto p = make_uniform_partition(0.0, 1.0, 10);
  CHECK(p.n() == 10);
  CHECK(p.breakpoint(0) == 0.0);
  CHECK(p.breakpoint(10) == 1.0);
  CHECK(p.breakpoint(3) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(p.max_step() == doctest::Approx(0.1).epsilon(1e-14));
  for (int j = 0; j < 10; ++j) CHECK(std::abs(p.step(j) - 0.1) < 4e-16);
  CHECK(p.is_uniform());
}

TEST_CASE("uniform partition on [0,5]") {
  auto p = make_uniform_partition(0.0, 5.0, 10);
  CHECK(p.max_step() == doctest::Approx(0.5));
  CHECK(p.b() == 5.0);
}

TEST_CASE("single interval") {
  auto p = make_uniform_partition(0.0, 1.0, 1);
  CHECK(p.n() == 1);
  CHECK(p.max_step() == 1.0);
  CHECK(p.locate(1.0) == 0);
}

TEST_CASE("binary-representable span gives ratio exactly one") {
  auto p = make_uniform_partition(0.0, 1.0, 8);
  CHECK(p.mesh_ratio() == 1.0);
}

TEST_CASE("explicit breakpoints") {
  auto p = make_partition({0.0, 0.5, 1.0});
  CHECK(p.max_step() == 0.5);
  CHECK(p.min_step() == 0.5);
  auto q = make_partition({0.0, 0.25, 1.0});
  CHECK(q.max_step() == 0.75);
  CHECK(q.min_step() == 0.25);
  CHECK(q.mesh_ratio() == 3.0);
  CHECK_FALSE(q.is_uniform());
}

TEST_CASE("invalid partitions are rejected") {
  CHECK_THROWS_AS(make_partition({0.0, 0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_partition({0.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_uniform_partition(1.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_uniform_partition(0.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("half-open interval location") {
  auto p = make_uniform_partition(0.0, 1.0, 4);
  CHECK(p.locate(0.0) == 0);
  CHECK(p.locate(0.25) == 1);
  CHECK(p.locate(0.2499) == 0);
  CHECK(p.locate(1.0) == 3);
  CHECK_THROWS_AS(p.locate(1.5), std::out_of_range);
  CHECK_THROWS_AS(p.locate(-0.1), std::out_of_range);
}
