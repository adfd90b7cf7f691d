#pragma once

#include <cmath>
#include <string>

#include "rulekin/dual.hpp"
#include "rulekin/errors.hpp"

namespace rulekin {

/// Vector in Lorentzian 3-space with signature (-,+,+); index 0 is the
/// negative direction.
struct RealVec3 {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

constexpr RealVec3 operator+(RealVec3 a, RealVec3 b) {
  return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
}
constexpr RealVec3 operator-(RealVec3 a, RealVec3 b) {
  return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
}
constexpr RealVec3 operator-(RealVec3 a) { return {-a.c0, -a.c1, -a.c2}; }
constexpr RealVec3 operator*(double s, RealVec3 a) {
  return {s * a.c0, s * a.c1, s * a.c2};
}
constexpr RealVec3 operator*(RealVec3 a, double s) { return s * a; }

constexpr bool operator==(RealVec3 a, RealVec3 b) {
  return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2;
}

/// Lorentzian inner product <a,b> = -a0 b0 + a1 b1 + a2 b2.
constexpr double linner(RealVec3 a, RealVec3 b) {
  return -a.c0 * b.c0 + a.c1 * b.c1 + a.c2 * b.c2;
}

/// Lorentzian cross product. Componentwise this is eta * (a x b) with the
/// Euclidean cross product and eta = diag(-1,1,1). The induced frame algebra
/// satisfies e1^e2 = e3, e2^e3 = -e1, e3^e1 = e2 and the contraction identity
/// a^(b^c) = <a,b>c - <a,c>b.
constexpr RealVec3 lcross(RealVec3 a, RealVec3 b) {
  return {a.c2 * b.c1 - a.c1 * b.c2,
          a.c2 * b.c0 - a.c0 * b.c2,
          a.c0 * b.c1 - a.c1 * b.c0};
}

enum class CausalClass { Timelike, Spacelike, Null };

/// Classification by the sign of <a,a> with a symmetric null band.
inline CausalClass causal_of(RealVec3 a) {
  const double q = linner(a, a);
  if (q < -tol::null_cone) return CausalClass::Timelike;
  if (q > tol::null_cone) return CausalClass::Spacelike;
  return CausalClass::Null;
}

inline const char* to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Timelike: return "timelike";
    case CausalClass::Spacelike: return "spacelike";
    default: return "null";
  }
}

/// Dual vector A = a + eps a*: a point of the dual Lorentzian module, or an
/// oriented line of Lorentzian 3-space when <a,a> = +-1 and <a,a*> = 0.
struct DualVec3 {
  RealVec3 real;
  RealVec3 dual;
};

constexpr DualVec3 operator+(DualVec3 a, DualVec3 b) {
  return {a.real + b.real, a.dual + b.dual};
}
constexpr DualVec3 operator-(DualVec3 a, DualVec3 b) {
  return {a.real - b.real, a.dual - b.dual};
}
constexpr DualVec3 operator-(DualVec3 a) { return {-a.real, -a.dual}; }
constexpr DualVec3 operator*(double s, DualVec3 a) { return {s * a.real, s * a.dual}; }
constexpr DualVec3 operator*(DualVec3 a, double s) { return s * a; }

/// Module action of a dual scalar: (l + eps l')(a + eps a') = l a + eps(l a' + l' a).
constexpr DualVec3 operator*(DualScalar s, DualVec3 a) {
  return {s.real * a.real, s.real * a.dual + s.dual * a.real};
}

/// Dual-valued inner product <A,B> = <a,b> + eps(<a,b*> + <a*,b>).
constexpr DualScalar dinner(DualVec3 a, DualVec3 b) {
  return {linner(a.real, b.real), linner(a.real, b.dual) + linner(a.dual, b.real)};
}

/// Dual-valued cross product A ^ B.
constexpr DualVec3 dcross(DualVec3 a, DualVec3 b) {
  return {lcross(a.real, b.real), lcross(a.real, b.dual) + lcross(a.dual, b.real)};
}

inline CausalClass causal(DualVec3 a) { return causal_of(a.real); }

inline bool finite(RealVec3 a) {
  return std::isfinite(a.c0) && std::isfinite(a.c1) && std::isfinite(a.c2);
}
inline bool finite(DualVec3 a) { return finite(a.real) && finite(a.dual); }

/// Dual norm of a non-null dual vector:
/// ||A|| = ||a|| + eps s <a,a*>/||a|| with ||a|| = sqrt(|<a,a>|) and s the sign
/// of <a,a>. With this sign convention ||A||^2 reproduces |<A,A>| as a dual
/// identity for both causal classes.
inline DualScalar dnorm(DualVec3 a) {
  const double q = linner(a.real, a.real);
  if (std::abs(q) <= tol::null_cone) {
    throw NullDirection("dnorm: real part is null (<a,a> = " + std::to_string(q) + ")");
  }
  const double n = std::sqrt(std::abs(q));
  const double sign = q > 0.0 ? 1.0 : -1.0;
  return {n, sign * linner(a.real, a.dual) / n};
}

/// Oriented line through `point` with unit non-null `direction`.
struct LineRep {
  RealVec3 point;
  RealVec3 direction;
};

/// Line through p with unit non-null direction e, as a unit dual vector
/// U = e + eps (p ^ e). The moment p ^ e is independent of the choice of p
/// along the line.
inline DualVec3 line_to_dual(RealVec3 p, RealVec3 e) {
  if (causal_of(e) == CausalClass::Null) {
    throw NullDirection("line_to_dual: direction is null");
  }
  return {e, lcross(p, e)};
}

inline DualVec3 line_to_dual(const LineRep& line) {
  return line_to_dual(line.point, line.direction);
}

/// Foot point of the line represented by U: the unique point of the line that
/// is Lorentz-orthogonal to the direction, recovered as -e ^ m / <e,e>.
inline RealVec3 foot_point(DualVec3 u) {
  const double q = linner(u.real, u.real);
  if (std::abs(q) <= tol::null_cone) {
    throw NullDirection("foot_point: direction is null");
  }
  const double pitch_defect = linner(u.real, u.dual);
  if (std::abs(pitch_defect) > tol::unit_line) {
    throw NotALine("foot_point: <direction, moment> = " + std::to_string(pitch_defect) +
                   " exceeds " + std::to_string(tol::unit_line));
  }
  return (-1.0 / q) * lcross(u.real, u.dual);
}

inline LineRep line_of(DualVec3 u) { return {foot_point(u), u.real}; }

}  // namespace rulekin
