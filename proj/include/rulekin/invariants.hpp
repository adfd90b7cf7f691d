#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "rulekin/dual.hpp"
#include "rulekin/errors.hpp"
#include "rulekin/frame.hpp"
#include "rulekin/grid.hpp"
#include "rulekin/minkowski.hpp"

namespace rulekin {

/// Which moving frame a coefficient triple refers to.
enum class FrameTag { U, V };

/// Formal vector x1 F1 + x2 F2 + x3 F3 of dual coefficients on an orthonormal
/// moving frame (F1 timelike). Contractions only combine vectors on the same
/// frame; the frame metric is (-,+,+).
struct FrameVector {
  FrameTag tag = FrameTag::U;
  DualScalar c1{}, c2{}, c3{};
};

inline DualScalar frame_inner(const FrameVector& a, const FrameVector& b) {
  if (a.tag != b.tag) {
    throw FrameMismatch("frame_inner: coefficients refer to different frames");
  }
  return -(a.c1 * b.c1) + a.c2 * b.c2 + a.c3 * b.c3;
}

/// Steiner vector of the closed motion, as coefficients on the U frame:
/// D = U1 closed_integral(tau) - U3 closed_integral(kappa).
inline FrameVector steiner(const SampledFrame& f) {
  return {FrameTag::U, closed_integral(f.tau, f.period), DualScalar{},
          -closed_integral(f.kappa, f.period)};
}

/// Dual angle of pitch of a unit axis X against a Steiner vector D:
/// Lambda_X = -<D, X>. Its real part is the (real) angle of pitch lambda_X and
/// L_X = -dual part is the pitch.
inline DualScalar angle_of_pitch(const FrameVector& d, const FrameVector& axis) {
  return -frame_inner(d, axis);
}

/// Integral invariants of one closed ruled surface of the motion.
/// `pitch` and `pitch_integral` are two computations of the same number: the
/// dual part of the angle of pitch, and the independent closed-form integral.
struct InvariantTriple {
  std::string axis;
  DualScalar Lambda{};          // dual angle of pitch
  double lambda = 0.0;          // Lambda.real
  double pitch = 0.0;           // L = -Lambda.dual
  double pitch_integral = 0.0;  // closed-form integral path
  std::vector<double> drall;    // distribution parameter per node; empty if undefined
  std::string drall_note;       // reason when drall is empty
};

enum class UAxis { U1, U2, U3 };

inline const char* to_string(UAxis a) {
  switch (a) {
    case UAxis::U1: return "U1";
    case UAxis::U2: return "U2";
    default: return "U3";
  }
}

/// Invariants of the three base ruled surfaces swept by the frame axes.
/// Drall closed forms per node:
///   U1: k1*/k1,  U2: (k2 k2* - k1 k1*)/(k2^2 - k1^2),  U3: k2*/k2,
/// each guarded against a vanishing denominator.
inline InvariantTriple axis_invariants(const SampledFrame& f, UAxis which) {
  const FrameVector d = steiner(f);
  const DualScalar int_kappa = closed_integral(f.kappa, f.period);
  const DualScalar int_tau = closed_integral(f.tau, f.period);

  InvariantTriple out;
  out.axis = to_string(which);

  FrameVector axis{FrameTag::U, {}, {}, {}};
  switch (which) {
    case UAxis::U1: axis.c1 = {1.0, 0.0}; break;
    case UAxis::U2: axis.c2 = {1.0, 0.0}; break;
    case UAxis::U3: axis.c3 = {1.0, 0.0}; break;
  }
  out.Lambda = angle_of_pitch(d, axis);
  out.lambda = out.Lambda.real;
  out.pitch = -out.Lambda.dual;
  switch (which) {
    case UAxis::U1: out.pitch_integral = -int_tau.dual; break;
    case UAxis::U2: out.pitch_integral = 0.0; break;
    case UAxis::U3: out.pitch_integral = -int_kappa.dual; break;
  }

  out.drall.reserve(f.n);
  for (std::size_t i = 0; i < f.n; ++i) {
    const double k1 = f.kappa[i].real, k1s = f.kappa[i].dual;
    const double k2 = f.tau[i].real, k2s = f.tau[i].dual;
    switch (which) {
      case UAxis::U1: {
        if (std::abs(k1) <= tol::drall_denominator) {
          throw DrallSingularity("axis_invariants(U1): k1 = 0 at node " + std::to_string(i), i);
        }
        out.drall.push_back(k1s / k1);
        break;
      }
      case UAxis::U2: {
        const double den = k2 * k2 - k1 * k1;
        if (std::abs(den) <= tol::drall_denominator) {
          throw DrallSingularity("axis_invariants(U2): k2^2 - k1^2 = 0 at node " + std::to_string(i), i);
        }
        out.drall.push_back((k2 * k2s - k1 * k1s) / den);
        break;
      }
      case UAxis::U3: {
        if (std::abs(k2) <= tol::drall_denominator) {
          throw DrallSingularity("axis_invariants(U3): k2 = 0 at node " + std::to_string(i), i);
        }
        out.drall.push_back(k2s / k2);
        break;
      }
    }
  }
  return out;
}

namespace detail {

inline void require_constant(const std::vector<DualScalar>& v, const char* name,
                             bool theta_flavour) {
  double re_lo = v[0].real, re_hi = v[0].real, du_lo = v[0].dual, du_hi = v[0].dual;
  for (const DualScalar& x : v) {
    re_lo = std::min(re_lo, x.real);
    re_hi = std::max(re_hi, x.real);
    du_lo = std::min(du_lo, x.dual);
    du_hi = std::max(du_hi, x.dual);
  }
  const double spread = std::max(re_hi - re_lo, du_hi - du_lo);
  if (spread > tol::constant_angle) {
    const std::string msg = std::string("closed-form invariants need constant ") + name +
                            " (spread " + std::to_string(spread) + ")";
    if (theta_flavour) throw VaryingTheta(msg);
    throw VaryingOmega(msg);
  }
}

inline DualScalar mean(const std::vector<DualScalar>& v) {
  KahanSum re, du;
  for (const DualScalar& x : v) {
    re.add(x.real);
    du.add(x.dual);
  }
  const double n = static_cast<double>(v.size());
  return {re.sum / n, du.sum / n};
}

/// Printed closed-form drall of the axis surface, spacelike rotation case:
///   [-w' w*' + g ((k1* - k2 w*) sinh w + (k1 w* - k2*) cosh w)] / (g^2 - w'^2)
/// with g = k1 sinh w - k2 cosh w. The same algebra serves the parallel frame
/// with (p, q, theta) substituted for (k1, k2, omega).
inline double drall_axis_spacelike(double k1, double k2, double k1s, double k2s,
                                   double w, double ws, double wp, double wsp,
                                   double* denominator = nullptr) {
  const double s = std::sinh(w), c = std::cosh(w);
  const double g = k1 * s - k2 * c;
  const double num = -wp * wsp + g * ((k1s - k2 * ws) * s + (k1 * ws - k2s) * c);
  const double den = g * g - wp * wp;
  if (denominator) *denominator = den;
  return num / den;
}

/// Timelike-case counterpart with the definitional denominator
/// (k1 cosh w - k2 sinh w)^2 + w'^2.
inline double drall_axis_timelike(double k1, double k2, double k1s, double k2s,
                                  double w, double ws, double wp, double wsp,
                                  double* denominator = nullptr) {
  const double s = std::sinh(w), c = std::cosh(w);
  const double g = k1 * c - k2 * s;
  const double num = wp * wsp + g * ((k1s - k2 * ws) * c + (k1 * ws - k2s) * s);
  const double den = g * g + wp * wp;
  if (denominator) *denominator = den;
  return num / den;
}

}  // namespace detail

/// Invariants of the central ruled surface traced by the Pfaffian axis C.
/// The closed-form pitch/angle paths require a constant dual angle omega
/// (VaryingOmega otherwise). Drall is reported per node where defined; when
/// the axis is stationary (or the denominator degenerates) the drall of C is
/// reported as undefined rather than as an error.
inline InvariantTriple pfaff_axis_invariants(const SampledFrame& f, const PfaffData& p) {
  detail::require_constant(p.omega, "omega", /*theta_flavour=*/false);
  const DualScalar w0 = detail::mean(p.omega);

  const FrameVector d = steiner(f);
  const DualScalar int_kappa = closed_integral(f.kappa, f.period);
  const DualScalar int_tau = closed_integral(f.tau, f.period);

  InvariantTriple out;
  out.axis = "C";

  FrameVector axis{FrameTag::U, {}, {}, {}};
  if (p.psi_case == PsiCase::Spacelike) {
    axis.c1 = dsinh(w0);
    axis.c3 = -dcosh(w0);
  } else {
    axis.c1 = dcosh(w0);
    axis.c3 = -dsinh(w0);
  }
  out.Lambda = angle_of_pitch(d, axis);
  out.lambda = out.Lambda.real;
  out.pitch = -out.Lambda.dual;

  const double c = std::cosh(w0.real), s = std::sinh(w0.real), ws = w0.dual;
  if (p.psi_case == PsiCase::Spacelike) {
    out.pitch_integral = c * int_kappa.dual - s * int_tau.dual -
                         ws * (c * int_tau.real - s * int_kappa.real);
  } else {
    out.pitch_integral = s * int_kappa.dual - c * int_tau.dual -
                         ws * (s * int_tau.real - c * int_kappa.real);
  }

  out.drall.reserve(f.n);
  for (std::size_t i = 0; i < f.n; ++i) {
    const double k1 = f.kappa[i].real, k1s = f.kappa[i].dual;
    const double k2 = f.tau[i].real, k2s = f.tau[i].dual;
    const double w = p.omega[i].real, wsn = p.omega[i].dual;
    const double wp = p.omega_prime[i].real, wsp = p.omega_prime[i].dual;
    double den = 0.0;
    double value = 0.0;
    if (p.psi_case == PsiCase::Spacelike) {
      value = detail::drall_axis_spacelike(k1, k2, k1s, k2s, w, wsn, wp, wsp, &den);
    } else {
      // Printed form: the timelike numerator over the spacelike denominator.
      const double sh = std::sinh(w), ch = std::cosh(w);
      const double g = k1 * ch - k2 * sh;
      const double num = wp * wsp + g * ((k1s - k2 * wsn) * ch + (k1 * wsn - k2s) * sh);
      const double gs = k1 * sh - k2 * ch;
      den = gs * gs - wp * wp;
      value = num / den;
    }
    if (std::abs(den) <= tol::drall_denominator) {
      out.drall.clear();
      out.drall_note = "drall undefined: axis surface degenerates (denominator ~ 0 at node " +
                       std::to_string(i) + ")";
      break;
    }
    out.drall.push_back(value);
  }
  return out;
}

}  // namespace rulekin
