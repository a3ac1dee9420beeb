#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twistbaker/errors.hpp"
#include "twistbaker/map_core.hpp"

using namespace twistbaker;
using oracle::make_point;

TEST_CASE("dimension must be at least two") {
  CHECK_THROWS_AS(Dimension(1), DomainError);
  CHECK(Dimension(2).value() == 2);
}

TEST_CASE("region uses x1 >= 0 for R") {
  CHECK(region(make_point({"0", "1/2"})) == Symbol::R);
  CHECK(region(make_point({"-1/2", "1/2"})) == Symbol::L);
  CHECK(region(make_point({"1/3", "1/3", "1/3"})) == Symbol::R);
  CHECK_THROWS_AS(region(make_point({"3/2", "1/2"})), DomainError);
  CHECK_THROWS_AS(region(make_point({"0", "-1/2"})), DomainError);
}

TEST_CASE("apply on known points") {
  CHECK(apply(make_point({"1/3", "1/3"})) == make_point({"1/3", "1/3"}));
  CHECK(apply(make_point({"1/3", "1/3", "1/3", "1/3"})) == make_point({"1/3", "1/3", "1/3", "1/3"}));
  CHECK(apply(make_point({"3/5", "3/5"})) == make_point({"-1/5", "3/5"}));
  CHECK(apply(make_point({"-1", "0", "0"})) == make_point({"-1", "0", "0"}));
  CHECK_THROWS_AS(apply(make_point({"2", "0"})), DomainError);
}

TEST_CASE("twist and tent factors") {
  CHECK(apply_t(make_point({"3/5", "3/5"})) == make_point({"3/5", "3/5"}));
  CHECK(apply_t(make_point({"1/2", "0", "0"})) == make_point({"0", "1/2", "0"}));
  CHECK(apply_t(make_point({"-1/2", "1/4", "0"})) == make_point({"-1/2", "1/4", "0"}));
  CHECK(apply_b(make_point({"1/2", "1"})) == make_point({"0", "1"}));
  CHECK(apply_b(make_point({"-1/4", "1"})) == make_point({"1/2", "1"}));
}

TEST_CASE("branch affine maps") {
  const AffineMap r2 = branch_affine(Symbol::R, Dimension(2));
  CHECK(r2.matrix == std::vector<std::vector<BigInt>>{{0, -2}, {1, 0}});
  CHECK(r2.offset == std::vector<BigInt>{1, 0});

  const AffineMap l3 = branch_affine(Symbol::L, Dimension(3));
  CHECK(l3.matrix == std::vector<std::vector<BigInt>>{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(l3.offset == std::vector<BigInt>{1, 0, 0});

  const AffineMap r3 = branch_affine(Symbol::R, Dimension(3));
  CHECK(r3.matrix == std::vector<std::vector<BigInt>>{{0, 0, -2}, {1, 0, 0}, {0, 1, 0}});
  CHECK(r3.offset == std::vector<BigInt>{1, 0, 0});

  for (int m = 2; m <= 6; ++m) {
    CHECK(abs(branch_affine(Symbol::L, Dimension(m)).determinant()) == 2);
    CHECK(abs(branch_affine(Symbol::R, Dimension(m)).determinant()) == 2);
  }
}

TEST_CASE("kneading prefixes") {
  CHECK(kneading_prefix(make_point({"1/3", "1/3"}), 4).str() == "RRRR");
  CHECK(kneading_prefix(make_point({"-1", "0"}), 3).str() == "LLL");
  CHECK(kneading_prefix(make_point({"-1/5", "3/5"}), 4).str() == "LRLR");
  CHECK(kneading_prefix(make_point({"-1/5", "3/5"}), 0).empty());
}

TEST_CASE("property: F = B o T, closure and affine consistency") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t m = 2 + trial % 4;
    const Point p = oracle::random_point(rng, m);
    const Point fp = apply(p);
    REQUIRE(fp == apply_b(apply_t(p)));
    REQUIRE(in_domain(fp));
    if (trial < 2000) {
      REQUIRE(branch_affine(region(p), p.dim())(p) == fp);
    }
  }
}

TEST_CASE("property: N is pointwise fixed") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Point p = oracle::random_point(rng, 2 + trial % 3);
    p[0] = -1;
    CHECK(apply(p) == p);
  }
}
