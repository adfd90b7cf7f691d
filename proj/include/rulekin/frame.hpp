#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "rulekin/dual.hpp"
#include "rulekin/errors.hpp"
#include "rulekin/grid.hpp"
#include "rulekin/minkowski.hpp"

namespace rulekin {

/// Frenet apparatus of a closed timelike curve on the dual unit pseudo-sphere,
/// sampled at n uniform nodes over one period:
///   U1 = the curve, U2 = U1' / ||U1'||, U3 = U1 ^ U2,
///   kappa = <U1', U2> (= ||U1'||, real part positive),
///   tau   = <U3', U2>.
/// The triple is orthonormal with <U1,U1> = -1, <U2,U2> = <U3,U3> = +1 up to
/// discretization error; `frame_residual` records the worst deviation.
struct SampledFrame {
  double period = 0.0;
  std::size_t n = 0;
  std::vector<DualVec3> U1, U2, U3;
  std::vector<DualScalar> kappa, tau;
  double frame_residual = 0.0;
};

namespace detail {
/// Largest deviation of the six independent dual products from orthonormality
/// at one node (real and dual parts both counted).
inline double orthonormality_defect(const DualVec3& u1, const DualVec3& u2, const DualVec3& u3) {
  auto defect = [](DualScalar got, double want) {
    return std::max(std::abs(got.real - want), std::abs(got.dual));
  };
  double worst = defect(dinner(u1, u1), -1.0);
  worst = std::max(worst, defect(dinner(u2, u2), 1.0));
  worst = std::max(worst, defect(dinner(u3, u3), 1.0));
  worst = std::max(worst, defect(dinner(u1, u2), 0.0));
  worst = std::max(worst, defect(dinner(u1, u3), 0.0));
  worst = std::max(worst, defect(dinner(u2, u3), 0.0));
  return worst;
}
}  // namespace detail

inline SampledFrame frenet(const std::vector<DualVec3>& samples, double period) {
  const std::size_t n = samples.size();
  if (n < 16) throw BadSpec("frenet: need at least 16 samples, got " + std::to_string(n));
  if (!(period > 0.0)) throw BadSpec("frenet: period must be positive");

  for (std::size_t i = 0; i < n; ++i) {
    if (!finite(samples[i])) {
      throw BadSpec("frenet: non-finite sample at node " + std::to_string(i));
    }
    const double q = linner(samples[i].real, samples[i].real);
    const double m = linner(samples[i].real, samples[i].dual);
    if (std::abs(q + 1.0) > tol::frame || std::abs(m) > tol::unit_line) {
      throw BadSpec("frenet: sample at node " + std::to_string(i) +
                    " is not a unit timelike line (<e,e> = " + std::to_string(q) +
                    ", <e,m> = " + std::to_string(m) + ")");
    }
  }

  SampledFrame f;
  f.period = period;
  f.n = n;
  f.U1 = samples;
  f.U2.reserve(n);
  f.U3.reserve(n);
  f.kappa.reserve(n);

  const std::vector<DualVec3> dU1 = diff_periodic(samples, period, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double speed2 = linner(dU1[i].real, dU1[i].real);
    if (speed2 < -tol::null_cone) {
      throw NonSpacelikeTangentImage(
          "frenet: <u',u'> = " + std::to_string(speed2) + " < 0 at node " + std::to_string(i), i);
    }
    if (speed2 <= tol::null_cone) {
      throw DegenerateSpeed("frenet: ||u'|| ~ 0 at node " + std::to_string(i), i);
    }
    const DualScalar norm = dnorm(dU1[i]);
    f.U2.push_back(ddiv({1.0, 0.0}, norm) * dU1[i]);
    f.U3.push_back(dcross(samples[i], f.U2.back()));
    f.kappa.push_back(dinner(dU1[i], f.U2.back()));
  }

  const std::vector<DualVec3> dU3 = diff_periodic(f.U3, period, 1);
  f.tau.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    f.tau.push_back(dinner(dU3[i], f.U2[i]));
  }

  for (std::size_t i = 0; i < n; ++i) {
    f.frame_residual =
        std::max(f.frame_residual, detail::orthonormality_defect(f.U1[i], f.U2[i], f.U3[i]));
  }
  // 1e-8 orthonormality is only reachable on adequately resolved analytic
  // curves; anything past this wall means the input was not a smooth closed
  // unit curve at this resolution.
  if (f.frame_residual > 1e-2) {
    throw NumericalFailure("frenet: frame orthonormality defect " +
                           std::to_string(f.frame_residual) +
                           " (input unresolved or not smooth)");
  }
  return f;
}

/// Causal class of the Pfaffian (rotation) vector Psi = tau U1 - kappa U3,
/// with <Psi,Psi> = kappa^2 - tau^2.
enum class PsiCase { Spacelike, Timelike };

inline const char* to_string(PsiCase c) {
  return c == PsiCase::Spacelike ? "spacelike" : "timelike";
}

/// Normalized rotation axis data. In the spacelike case (|kappa| > |tau|
/// everywhere) Omega = artanh(tau/kappa) and C = sinh(Omega) U1 - cosh(Omega) U3
/// with <C,C> = +1; in the timelike case (|kappa| < |tau|) Omega =
/// artanh(kappa/tau) and C = cosh(Omega) U1 - sinh(Omega) U3 with <C,C> = -1.
struct PfaffData {
  PsiCase psi_case = PsiCase::Timelike;
  std::vector<DualScalar> omega;        // dual angle per node
  std::vector<DualScalar> omega_prime;  // (omega', omega*') per node
  std::vector<DualVec3> axis;           // C per node
};

inline PfaffData pfaffian(const SampledFrame& f) {
  PfaffData p;
  if (f.n == 0) throw BadSpec("pfaffian: empty frame");

  int sign0 = 0;
  for (std::size_t i = 0; i < f.n; ++i) {
    const double gap = std::abs(f.kappa[i].real) - std::abs(f.tau[i].real);
    if (std::abs(gap) <= tol::null_cone) {
      throw NullPfaffian("pfaffian: |kappa| = |tau| within tolerance at node " +
                             std::to_string(i),
                         i);
    }
    const int sign = gap > 0.0 ? 1 : -1;
    if (sign0 == 0) sign0 = sign;
    if (sign != sign0) {
      throw MixedCase("pfaffian: rotation vector changes causal class at node " +
                      std::to_string(i));
    }
  }
  p.psi_case = sign0 > 0 ? PsiCase::Spacelike : PsiCase::Timelike;

  p.omega.reserve(f.n);
  p.axis.reserve(f.n);
  for (std::size_t i = 0; i < f.n; ++i) {
    if (p.psi_case == PsiCase::Spacelike) {
      const DualScalar w = dartanh(ddiv(f.tau[i], f.kappa[i]));
      p.omega.push_back(w);
      p.axis.push_back(dsinh(w) * f.U1[i] - dcosh(w) * f.U3[i]);
    } else {
      const DualScalar w = dartanh(ddiv(f.kappa[i], f.tau[i]));
      p.omega.push_back(w);
      p.axis.push_back(dcosh(w) * f.U1[i] - dsinh(w) * f.U3[i]);
    }
  }
  p.omega_prime = diff_periodic(p.omega, f.period, 1);
  return p;
}

}  // namespace rulekin
