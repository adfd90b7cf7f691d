#include <cmath>

#include <doctest.h>

#include "rulekin/dual.hpp"

using namespace rulekin;

TEST_CASE("dual product") {
  const DualScalar p = dmul({1.0, 2.0}, {3.0, 4.0});
  CHECK(p.real == 3.0);
  CHECK(p.dual == 10.0);

  // eps^2 = 0: the product of two pure-dual numbers vanishes
  const DualScalar z = dmul({0.0, 5.0}, {0.0, 7.0});
  CHECK(z.real == 0.0);
  CHECK(z.dual == 0.0);
}

TEST_CASE("dual division") {
  const DualScalar q = ddiv({4.0, 4.0}, {2.0, 1.0});
  CHECK(q.real == 2.0);
  CHECK(q.dual == 1.0);

  const DualScalar r = ddiv({3.0, 0.0}, {1.0, 2.0});
  CHECK(r.real == 3.0);
  CHECK(r.dual == -6.0);

  CHECK_THROWS_AS(ddiv({1.0, 0.0}, {0.0, 3.0}), DivisionByPureDual);
  CHECK_THROWS_AS(ddiv({1.0, 0.0}, {1e-13, 3.0}), DivisionByPureDual);
}

TEST_CASE("division inverts multiplication") {
  const DualScalar a{1.7, -0.4};
  const DualScalar b{-2.3, 5.1};
  const DualScalar back = ddiv(dmul(a, b), b);
  CHECK(std::abs(back.real - a.real) <= 1e-12);
  // conditioning of the dual part scales with |b.dual / b.real|
  const double dual_tol = 1e-12 * std::max(1.0, std::abs(b.dual / b.real));
  CHECK(std::abs(back.dual - a.dual) <= dual_tol);
}

TEST_CASE("square root") {
  const DualScalar s = dsqrt({4.0, 4.0});
  CHECK(s.real == 2.0);
  CHECK(s.dual == 1.0);

  const DualScalar sq = dmul(s, s);
  CHECK(sq.real == 4.0);
  CHECK(sq.dual == 4.0);

  CHECK_THROWS_AS(dsqrt({0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(dsqrt({-4.0, 1.0}), DomainError);
}

TEST_CASE("hyperbolic lifts") {
  const DualScalar a{0.8, 1.5};

  const DualScalar sh = dsinh(a);
  CHECK(sh.real == doctest::Approx(std::sinh(0.8)).epsilon(1e-15));
  CHECK(sh.dual == doctest::Approx(1.5 * std::cosh(0.8)).epsilon(1e-15));

  const DualScalar ch = dcosh(a);
  CHECK(ch.real == doctest::Approx(std::cosh(0.8)).epsilon(1e-15));
  CHECK(ch.dual == doctest::Approx(1.5 * std::sinh(0.8)).epsilon(1e-15));

  // cosh^2 - sinh^2 = 1 in dual arithmetic
  const DualScalar one = ch * ch - sh * sh;
  CHECK(one.real == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(one.dual) <= 1e-15);

  const DualScalar th = dtanh(a);
  const DualScalar th2 = ddiv(sh, ch);
  CHECK(th.real == doctest::Approx(th2.real).epsilon(1e-15));
  CHECK(th.dual == doctest::Approx(th2.dual).epsilon(1e-15));
}

TEST_CASE("artanh inverts tanh") {
  const DualScalar a{0.6, -2.0};
  const DualScalar back = dartanh(dtanh(a));
  CHECK(back.real == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(back.dual == doctest::Approx(-2.0).epsilon(1e-14));

  CHECK_THROWS_AS(dartanh({1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(dartanh({-1.5, 0.0}), DomainError);
}

TEST_CASE("lift obeys the chain rule") {
  // f(x) = x^3 lifted explicitly vs three multiplications
  const DualScalar a{1.3, 0.7};
  const DualScalar cube = dlift([](double x) { return x * x * x; },
                                [](double x) { return 3.0 * x * x; }, a);
  const DualScalar direct = a * a * a;
  CHECK(cube.real == doctest::Approx(direct.real).epsilon(1e-15));
  CHECK(cube.dual == doctest::Approx(direct.dual).epsilon(1e-15));
}

TEST_CASE("finite check") {
  CHECK(finite(DualScalar{1.0, 2.0}));
  CHECK_FALSE(finite(DualScalar{std::nan(""), 0.0}));
  CHECK_FALSE(finite(DualScalar{0.0, INFINITY}));
}
