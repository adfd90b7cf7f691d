#include <cmath>
#include <random>

#include <doctest.h>

#include "rulekin/minkowski.hpp"

using namespace rulekin;

namespace {
const RealVec3 e1{1.0, 0.0, 0.0};
const RealVec3 e2{0.0, 1.0, 0.0};
const RealVec3 e3{0.0, 0.0, 1.0};

RealVec3 random_vec(std::mt19937& rng) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  return {d(rng), d(rng), d(rng)};
}
}  // namespace

TEST_CASE("inner product signature") {
  CHECK(linner(e1, e1) == -1.0);
  CHECK(linner(e2, e2) == 1.0);
  CHECK(linner(e3, e3) == 1.0);
  CHECK(linner(e1, e2) == 0.0);
  CHECK(linner({1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}) == -4.0 + 10.0 + 18.0);
}

TEST_CASE("cross product frame algebra") {
  CHECK(lcross(e1, e2) == e3);
  CHECK(lcross(e2, e3) == -e1);
  CHECK(lcross(e3, e1) == e2);
  // antisymmetry
  CHECK(lcross(e2, e1) == -e3);
}

TEST_CASE("cross product contraction identity") {
  std::mt19937 rng(7);
  for (int k = 0; k < 100; ++k) {
    const RealVec3 a = random_vec(rng), b = random_vec(rng), c = random_vec(rng);
    const RealVec3 lhs = lcross(a, lcross(b, c));
    const RealVec3 rhs = linner(a, b) * c - linner(a, c) * b;
    CHECK(std::abs(lhs.c0 - rhs.c0) <= 1e-12);
    CHECK(std::abs(lhs.c1 - rhs.c1) <= 1e-12);
    CHECK(std::abs(lhs.c2 - rhs.c2) <= 1e-12);
    // the product is orthogonal to both factors
    CHECK(std::abs(linner(lcross(a, b), a)) <= 1e-12);
    CHECK(std::abs(linner(lcross(a, b), b)) <= 1e-12);
  }
}

TEST_CASE("causal classification") {
  CHECK(causal_of(e1) == CausalClass::Timelike);
  CHECK(causal_of(e2) == CausalClass::Spacelike);
  CHECK(causal_of({1.0, 1.0, 0.0}) == CausalClass::Null);
  CHECK(to_string(CausalClass::Null) == std::string("null"));
}

TEST_CASE("dual vector inner and cross") {
  const DualVec3 A{e1, e2};
  const DualVec3 B{e2, e3};
  const DualScalar ip = dinner(A, B);
  // <e1,e2> + eps(<e1,e3> + <e2,e2>)
  CHECK(ip.real == 0.0);
  CHECK(ip.dual == 1.0);

  const DualVec3 cp = dcross(A, B);
  CHECK(cp.real == lcross(e1, e2));
  CHECK(cp.dual == lcross(e1, e3) + lcross(e2, e2));
}

TEST_CASE("dual scalar times dual vector kills eps^2") {
  const DualScalar s{2.0, 3.0};
  const DualVec3 A{e2, e3};
  const DualVec3 out = s * A;
  CHECK(out.real == 2.0 * e2);
  CHECK(out.dual == 2.0 * e3 + 3.0 * e2);
}

TEST_CASE("dual norm reproduces the squared inner product") {
  std::mt19937 rng(11);
  for (int k = 0; k < 100; ++k) {
    RealVec3 a = random_vec(rng);
    if (causal_of(a) == CausalClass::Null) continue;
    const DualVec3 A{a, random_vec(rng)};
    const DualScalar n = dnorm(A);
    const DualScalar q = dinner(A, A);
    const DualScalar n2 = n * n;
    CHECK(n2.real == doctest::Approx(std::abs(q.real)).epsilon(1e-12));
    const double want_dual = q.real > 0.0 ? q.dual : -q.dual;
    CHECK(n2.dual == doctest::Approx(want_dual).epsilon(1e-12).scale(1.0));
  }
  CHECK_THROWS_AS(dnorm(DualVec3{{1.0, 1.0, 0.0}, e1}), NullDirection);
}

TEST_CASE("line representation roundtrip") {
  // line through (0,0,1) in the direction e1: moment is e2
  const DualVec3 u = line_to_dual({0.0, 0.0, 1.0}, e1);
  CHECK(u.real == e1);
  CHECK(u.dual == e2);

  // the foot point is the point of the line orthogonal to the direction
  const RealVec3 foot = foot_point(u);
  CHECK(foot == RealVec3{0.0, 0.0, 1.0});

  // moment is independent of the reference point along the line
  const DualVec3 u2 = line_to_dual({3.0, 0.0, 1.0}, e1);
  CHECK(u2.dual == u.dual);

  std::mt19937 rng(13);
  for (int k = 0; k < 50; ++k) {
    RealVec3 p = random_vec(rng);
    RealVec3 e = random_vec(rng);
    if (causal_of(e) == CausalClass::Null) continue;
    const double q = linner(e, e);
    e = (1.0 / std::sqrt(std::abs(q))) * e;
    const DualVec3 line = line_to_dual(p, e);
    const RealVec3 foot_k = foot_point(line);
    // foot lies on the line: (foot - p) ^ e = 0
    const RealVec3 offset = lcross(foot_k - p, e);
    CHECK(std::abs(offset.c0) <= 1e-12);
    CHECK(std::abs(offset.c1) <= 1e-12);
    CHECK(std::abs(offset.c2) <= 1e-12);
    // and is orthogonal to the direction
    CHECK(std::abs(linner(foot_k, e)) <= 1e-12);
  }
}

TEST_CASE("line representation guards") {
  CHECK_THROWS_AS(line_to_dual(e2, {1.0, 1.0, 0.0}), NullDirection);
  CHECK_THROWS_AS(foot_point(DualVec3{{1.0, 1.0, 0.0}, e3}), NullDirection);
  // <direction, moment> != 0 is not a line
  CHECK_THROWS_AS(foot_point(DualVec3{e2, e2}), NotALine);
}
