#pragma once

#include <cmath>
#include <string>

#include "rulekin/errors.hpp"

namespace rulekin {

/// Central numerical tolerances. Every guard in the library routes through one
/// of these constants so the thresholds are pinned in exactly one place.
namespace tol {
inline constexpr double divisor = 1e-12;         // smallest invertible real part
inline constexpr double null_cone = 1e-10;       // causal classification band on <a,a>
inline constexpr double unit_line = 1e-9;        // line representation: |<e,m>| bound
inline constexpr double frame = 1e-8;            // sampled-frame orthonormality
inline constexpr double constant_angle = 1e-8;   // spread allowed for "constant" angles
inline constexpr double drall_denominator = 1e-10;
}  // namespace tol

/// Dual scalar a + eps*a' with eps^2 = 0. `real` is the principal part,
/// `dual` the eps coefficient.
struct DualScalar {
  double real = 0.0;
  double dual = 0.0;
};

constexpr DualScalar operator+(DualScalar a, DualScalar b) {
  return {a.real + b.real, a.dual + b.dual};
}
constexpr DualScalar operator-(DualScalar a, DualScalar b) {
  return {a.real - b.real, a.dual - b.dual};
}
constexpr DualScalar operator-(DualScalar a) { return {-a.real, -a.dual}; }

/// (a + eps a')(b + eps b') = ab + eps(a b' + a' b).
constexpr DualScalar operator*(DualScalar a, DualScalar b) {
  return {a.real * b.real, a.real * b.dual + a.dual * b.real};
}
constexpr DualScalar operator*(double s, DualScalar a) { return {s * a.real, s * a.dual}; }
constexpr DualScalar operator*(DualScalar a, double s) { return {s * a.real, s * a.dual}; }

constexpr DualScalar dmul(DualScalar a, DualScalar b) { return a * b; }

/// a / b. Pure-dual divisors (real part below tol::divisor) have no inverse.
inline DualScalar ddiv(DualScalar a, DualScalar b) {
  if (std::abs(b.real) <= tol::divisor) {
    throw DivisionByPureDual("dual division: divisor real part " +
                             std::to_string(b.real) + " is below " +
                             std::to_string(tol::divisor));
  }
  const double r = a.real / b.real;
  return {r, (a.dual - r * b.dual) / b.real};
}

inline DualScalar operator/(DualScalar a, DualScalar b) { return ddiv(a, b); }
inline DualScalar operator/(DualScalar a, double s) { return ddiv(a, {s, 0.0}); }

constexpr bool operator==(DualScalar a, DualScalar b) {
  return a.real == b.real && a.dual == b.dual;
}

inline bool finite(DualScalar a) {
  return std::isfinite(a.real) && std::isfinite(a.dual);
}

/// Lift a smooth real function through dual numbers:
/// f(a + eps a') = f(a) + eps a' f'(a). The derivative is supplied explicitly;
/// nothing here depends on automatic differentiation.
template <class F, class DF>
DualScalar dlift(F&& f, DF&& df, DualScalar a) {
  return {f(a.real), a.dual * df(a.real)};
}

inline DualScalar dsinh(DualScalar a) {
  return {std::sinh(a.real), a.dual * std::cosh(a.real)};
}

inline DualScalar dcosh(DualScalar a) {
  return {std::cosh(a.real), a.dual * std::sinh(a.real)};
}

inline DualScalar dtanh(DualScalar a) {
  const double c = std::cosh(a.real);
  return {std::tanh(a.real), a.dual / (c * c)};
}

/// Inverse hyperbolic tangent; defined for |real| < 1 only.
inline DualScalar dartanh(DualScalar a) {
  if (!(std::abs(a.real) < 1.0)) {
    throw DomainError("dartanh: |real part| = " + std::to_string(std::abs(a.real)) +
                      " is not < 1");
  }
  return {std::atanh(a.real), a.dual / (1.0 - a.real * a.real)};
}

/// Square root; defined for real part > 0 only.
inline DualScalar dsqrt(DualScalar a) {
  if (!(a.real > 0.0)) {
    throw DomainError("dsqrt: real part " + std::to_string(a.real) + " is not > 0");
  }
  const double r = std::sqrt(a.real);
  return {r, a.dual / (2.0 * r)};
}

}  // namespace rulekin
