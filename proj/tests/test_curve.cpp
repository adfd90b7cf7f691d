#include <cmath>
#include <numbers>

#include <doctest.h>

#include "rulekin/curve.hpp"

using namespace rulekin;

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;
}

TEST_CASE("hyperboloid circle samples are unit timelike lines") {
  CurveSpec spec;
  spec.director = HyperboloidCircle{0.8};
  const auto samples = sample_curve(spec, 64);
  REQUIRE(samples.size() == 64);
  for (const auto& u : samples) {
    const DualScalar q = dinner(u, u);
    CHECK(q.real == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(q.dual) <= 1e-14);  // zero moment: <real, dual> = 0
    CHECK(causal(u) == CausalClass::Timelike);
  }
  // first sample sits at angle 0
  CHECK(samples[0].real.c0 == doctest::Approx(std::cosh(0.8)).epsilon(1e-15));
  CHECK(samples[0].real.c1 == doctest::Approx(std::sinh(0.8)).epsilon(1e-15));
  CHECK(samples[0].real.c2 == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("director is normalized before lifting") {
  CurveSpec spec;
  FourierSeries3 f;
  f.constant = {2.5, 0.0, 0.0};  // timelike but not unit
  f.cos_amp[1] = {0.5};
  f.sin_amp[2] = {0.5};
  spec.director = f;
  const auto samples = sample_curve(spec, 32);
  for (const auto& u : samples) {
    CHECK(linner(u.real, u.real) == doctest::Approx(-1.0).epsilon(1e-14));
  }
}

TEST_CASE("fourier evaluation and periodicity") {
  FourierSeries3 f;
  f.constant = {1.0, 2.0, 3.0};
  f.cos_amp[0] = {0.5, 0.0, 0.25};  // harmonics 1 and 3 on component 0
  f.sin_amp[1] = {0.0, 1.5};        // harmonic 2 on component 1
  const double T = 4.0;

  const RealVec3 at0 = f.eval(0.0, T);
  CHECK(at0.c0 == doctest::Approx(1.0 + 0.5 + 0.25).epsilon(1e-15));
  CHECK(at0.c1 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(at0.c2 == doctest::Approx(3.0).epsilon(1e-15));

  const RealVec3 quarter = f.eval(1.0, T);  // base angle pi/2
  CHECK(quarter.c0 == doctest::Approx(1.0 + 0.0 - 0.0).epsilon(1e-14).scale(1.0));
  CHECK(quarter.c1 == doctest::Approx(2.0 + 1.5 * std::sin(std::numbers::pi)).epsilon(1e-14).scale(1.0));

  for (double t : {0.3, 1.1, 2.9}) {
    const RealVec3 a = f.eval(t, T);
    const RealVec3 b = f.eval(t + T, T);
    CHECK(a.c0 == doctest::Approx(b.c0).epsilon(1e-13).scale(1.0));
    CHECK(a.c1 == doctest::Approx(b.c1).epsilon(1e-13).scale(1.0));
    CHECK(a.c2 == doctest::Approx(b.c2).epsilon(1e-13).scale(1.0));
  }
}

TEST_CASE("point moment puts every ruling through the point") {
  CurveSpec spec;
  spec.director = HyperboloidCircle{1.0};
  const RealVec3 p{0.4, -0.2, 0.7};
  spec.moment = MomentPoint{p};
  const auto samples = sample_curve(spec, 32);
  for (const auto& u : samples) {
    // moment of the line through p with direction e is p ^ e
    CHECK(u.dual == lcross(p, u.real));
    // line condition <e, m> = 0 holds for every sample
    CHECK(std::abs(linner(u.real, u.dual)) <= 1e-14);
    // p lies on the line: (foot - p) is parallel to the direction
    const RealVec3 r = lcross(foot_point(u) - p, u.real);
    CHECK(std::abs(r.c0) <= 1e-13);
    CHECK(std::abs(r.c1) <= 1e-13);
    CHECK(std::abs(r.c2) <= 1e-13);
  }
}

TEST_CASE("base curve moment follows the moving curve") {
  CurveSpec spec;
  spec.director = HyperboloidCircle{1.0};
  FourierSeries3 alpha;
  alpha.constant = {0.0, 0.0, 0.0};
  alpha.cos_amp[1] = {0.3};
  alpha.sin_amp[2] = {0.3};
  spec.moment = MomentBaseCurve{alpha};
  const auto samples = sample_curve(spec, 32);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double t = spec.period * static_cast<double>(i) / 32.0;
    const RealVec3 a = alpha.eval(t, spec.period);
    CHECK(samples[i].dual == lcross(a, samples[i].real));
    CHECK(std::abs(linner(samples[i].real, samples[i].dual)) <= 1e-14);
  }
}

TEST_CASE("zero moment leaves rulings through the origin") {
  CurveSpec spec;  // defaults: hyperboloid circle, zero moment
  const auto samples = sample_curve(spec, 16);
  for (const auto& u : samples) {
    CHECK(u.dual == RealVec3{0.0, 0.0, 0.0});
  }
}

TEST_CASE("sampling guards") {
  CurveSpec spec;
  CHECK_THROWS_AS(sample_curve(spec, 8), BadSpec);
  spec.period = 0.0;
  CHECK_THROWS_AS(sample_curve(spec, 64), BadSpec);
  spec.period = -2.0;
  CHECK_THROWS_AS(sample_curve(spec, 64), BadSpec);
}

TEST_CASE("non-timelike director is rejected with the node index") {
  CurveSpec spec;
  FourierSeries3 f;
  f.constant = {1.25, 0.0, 0.0};
  f.cos_amp[1] = {1.5};  // |c1| exceeds c0 near t = 0, so <e,e> > 0 there
  spec.director = f;
  bool threw = false;
  try {
    sample_curve(spec, 64);
  } catch (const NonTimelikeDirector& e) {
    threw = true;
    CHECK(std::string(e.what()).find("node") != std::string::npos);
  }
  CHECK(threw);
}
