#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "rulekin/errors.hpp"
#include "rulekin/minkowski.hpp"

namespace rulekin {

/// Truncated real Fourier series for each of the three components:
///   x_c(t) = constant_c + sum_k ( cos_amp[c][k-1] cos(2 pi k t / T)
///                               + sin_amp[c][k-1] sin(2 pi k t / T) ).
/// Exactly T-periodic by construction, so sampled loops always close.
struct FourierSeries3 {
  RealVec3 constant{};
  std::array<std::vector<double>, 3> cos_amp{};
  std::array<std::vector<double>, 3> sin_amp{};

  RealVec3 eval(double t, double period) const {
    const double base = 2.0 * std::numbers::pi * t / period;
    std::array<double, 3> out{constant.c0, constant.c1, constant.c2};
    for (std::size_t c = 0; c < 3; ++c) {
      const auto& ca = cos_amp[c];
      const auto& sa = sin_amp[c];
      const std::size_t harmonics = std::max(ca.size(), sa.size());
      for (std::size_t k = 0; k < harmonics; ++k) {
        const double angle = base * static_cast<double>(k + 1);
        if (k < ca.size() && ca[k] != 0.0) out[c] += ca[k] * std::cos(angle);
        if (k < sa.size() && sa[k] != 0.0) out[c] += sa[k] * std::sin(angle);
      }
    }
    return {out[0], out[1], out[2]};
  }
};

/// Circle at hyperbolic distance `a` around the axis direction on the unit
/// pseudo-sphere: e(t) = (cosh a, sinh a cos(2 pi t/T), sinh a sin(2 pi t/T)).
/// Timelike for every a; a must be positive to move at all.
struct HyperboloidCircle {
  double a = 0.0;

  RealVec3 eval(double t, double period) const {
    const double angle = 2.0 * std::numbers::pi * t / period;
    return {std::cosh(a), std::sinh(a) * std::cos(angle), std::sinh(a) * std::sin(angle)};
  }
};

using Director = std::variant<HyperboloidCircle, FourierSeries3>;

/// Moment models for the ruled surface:
/// all rulings through the origin / through a fixed point / through a moving
/// Fourier base curve.
struct MomentZero {};
struct MomentPoint {
  RealVec3 p;
};
struct MomentBaseCurve {
  FourierSeries3 alpha;
};
using Moment = std::variant<MomentZero, MomentPoint, MomentBaseCurve>;

/// Closed ruled surface given by a director family and a moment model over one
/// period. The director need not be normalized; sampling normalizes it.
struct CurveSpec {
  double period = 2.0 * std::numbers::pi;
  Director director = HyperboloidCircle{1.0};
  Moment moment = MomentZero{};
};

namespace detail {
inline RealVec3 eval_director(const Director& d, double t, double period) {
  return std::visit([&](const auto& fam) { return fam.eval(t, period); }, d);
}
}  // namespace detail

/// Sample the closed curve on the dual unit pseudo-sphere at the n uniform
/// nodes t_i = i*period/n. Each node is U(t_i) = e_hat + eps (alpha ^ e_hat)
/// with e_hat the director normalized to <e,e> = -1, so every sample is a
/// timelike oriented line. Requires n >= 16 and a director that is timelike
/// at every node.
inline std::vector<DualVec3> sample_curve(const CurveSpec& spec, std::size_t n) {
  if (n < 16) throw BadSpec("sample_curve: need at least 16 samples, got " + std::to_string(n));
  if (!(spec.period > 0.0)) throw BadSpec("sample_curve: period must be positive");

  std::vector<DualVec3> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = spec.period * static_cast<double>(i) / static_cast<double>(n);
    const RealVec3 e = detail::eval_director(spec.director, t, spec.period);
    if (!finite(e)) throw BadSpec("sample_curve: director is not finite at node " + std::to_string(i));
    const double q = linner(e, e);
    if (!(q < -tol::null_cone)) {
      throw NonTimelikeDirector(
          "sample_curve: director not timelike at node " + std::to_string(i) +
              " (<e,e> = " + std::to_string(q) + ")",
          i);
    }
    const RealVec3 unit = (1.0 / std::sqrt(-q)) * e;

    RealVec3 moment{};
    if (const auto* pt = std::get_if<MomentPoint>(&spec.moment)) {
      moment = lcross(pt->p, unit);
    } else if (const auto* base = std::get_if<MomentBaseCurve>(&spec.moment)) {
      moment = lcross(base->alpha.eval(t, spec.period), unit);
    }
    if (!finite(moment)) throw BadSpec("sample_curve: moment is not finite at node " + std::to_string(i));
    out.push_back({unit, moment});
  }
  return out;
}

}  // namespace rulekin
