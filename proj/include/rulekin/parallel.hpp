#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rulekin/dual.hpp"
#include "rulekin/errors.hpp"
#include "rulekin/frame.hpp"
#include "rulekin/grid.hpp"
#include "rulekin/invariants.hpp"
#include "rulekin/minkowski.hpp"

namespace rulekin {

/// Constant dual offset angle Phi = phi + eps phi* defining a parallel ruled
/// surface family.
struct ParallelAngle {
  DualScalar phi{};
};

/// Frame parallel to (U1,U2,U3) at constant dual angle Phi in the (U1,U3)
/// pencil:
///   V1 = cosh(Phi) U1 + sinh(Phi) U3,  V2 = U2,
///   V3 = -sinh(Phi) U1 - cosh(Phi) U3,
/// with Frenet coefficients P = kappa cosh(Phi) + tau sinh(Phi) and
/// Q = -kappa sinh(Phi) - tau cosh(Phi). The transfer matrix is involutory and
/// orientation-reversing.
///
/// The axis block (theta, cbar) mirrors the Pfaffian construction on (P,Q);
/// when the (P,Q) causal class is null or mixed along the curve the block is
/// left empty and `case_bar_issue` records why (cbar_invariants turns that
/// into the corresponding error).
struct ParallelFrame {
  double period = 0.0;
  std::size_t n = 0;
  DualScalar phi{};
  std::vector<DualVec3> V1, V2, V3;
  std::vector<DualScalar> P, Q;

  std::optional<PsiCase> case_bar;
  std::string case_bar_issue;
  std::size_t case_bar_node = 0;
  std::vector<DualScalar> theta, theta_prime;
  std::vector<DualVec3> cbar;
};

inline ParallelFrame parallel_frame(const SampledFrame& f, ParallelAngle ang) {
  ParallelFrame out;
  out.period = f.period;
  out.n = f.n;
  out.phi = ang.phi;

  const DualScalar ch = dcosh(ang.phi);
  const DualScalar sh = dsinh(ang.phi);

  out.V1.reserve(f.n);
  out.V2 = f.U2;
  out.V3.reserve(f.n);
  out.P.reserve(f.n);
  out.Q.reserve(f.n);
  for (std::size_t i = 0; i < f.n; ++i) {
    out.V1.push_back(ch * f.U1[i] + sh * f.U3[i]);
    out.V3.push_back(-(sh * f.U1[i]) - ch * f.U3[i]);
    const DualScalar p = f.kappa[i] * ch + f.tau[i] * sh;
    const DualScalar q = -(f.kappa[i] * sh) - f.tau[i] * ch;
    if (std::abs(p.real) <= tol::drall_denominator) {
      throw DegenerateParallel(
          "parallel_frame: P.real ~ 0 at node " + std::to_string(i) +
              "; V2 undefined for this offset angle",
          i);
    }
    out.P.push_back(p);
    out.Q.push_back(q);
  }

  // Axis block: causal class of the (P,Q) rotation vector, then theta and cbar.
  int sign0 = 0;
  for (std::size_t i = 0; i < f.n; ++i) {
    const double gap = std::abs(out.P[i].real) - std::abs(out.Q[i].real);
    if (std::abs(gap) <= tol::null_cone) {
      out.case_bar_issue = "null rotation vector: |P| = |Q| within tolerance at node " +
                           std::to_string(i);
      out.case_bar_node = i;
      return out;
    }
    const int sign = gap > 0.0 ? 1 : -1;
    if (sign0 == 0) sign0 = sign;
    if (sign != sign0) {
      out.case_bar_issue = "rotation vector changes causal class at node " + std::to_string(i);
      out.case_bar_node = i;
      return out;
    }
  }
  out.case_bar = sign0 > 0 ? PsiCase::Spacelike : PsiCase::Timelike;

  out.theta.reserve(f.n);
  out.cbar.reserve(f.n);
  for (std::size_t i = 0; i < f.n; ++i) {
    if (*out.case_bar == PsiCase::Spacelike) {
      const DualScalar th = dartanh(ddiv(out.Q[i], out.P[i]));
      out.theta.push_back(th);
      out.cbar.push_back(dsinh(th) * out.V1[i] - dcosh(th) * out.V3[i]);
    } else {
      const DualScalar th = dartanh(ddiv(out.P[i], out.Q[i]));
      out.theta.push_back(th);
      out.cbar.push_back(dcosh(th) * out.V1[i] - dsinh(th) * out.V3[i]);
    }
  }
  out.theta_prime = diff_periodic(out.theta, f.period, 1);
  return out;
}

/// Steiner vector on the V frame: D = -V1 closed_integral(Q) + V3 closed_integral(P).
inline FrameVector steiner_bar(const ParallelFrame& pf) {
  return {FrameTag::V, -closed_integral(pf.Q, pf.period), DualScalar{},
          closed_integral(pf.P, pf.period)};
}

enum class VAxis { V1, V2, V3 };

inline const char* to_string(VAxis a) {
  switch (a) {
    case VAxis::V1: return "V1";
    case VAxis::V2: return "V2";
    default: return "V3";
  }
}

/// Invariants of the ruled surfaces swept by the parallel-frame axes. Drall
/// closed forms per node mirror the base frame with (p,q) for (k1,k2):
///   V1: p*/p,  V2: (q q* - p p*)/(q^2 - p^2),  V3: q*/q.
inline InvariantTriple v_axis_invariants(const ParallelFrame& pf, VAxis which) {
  const FrameVector d = steiner_bar(pf);
  const DualScalar int_p = closed_integral(pf.P, pf.period);
  const DualScalar int_q = closed_integral(pf.Q, pf.period);

  InvariantTriple out;
  out.axis = to_string(which);

  FrameVector axis{FrameTag::V, {}, {}, {}};
  switch (which) {
    case VAxis::V1: axis.c1 = {1.0, 0.0}; break;
    case VAxis::V2: axis.c2 = {1.0, 0.0}; break;
    case VAxis::V3: axis.c3 = {1.0, 0.0}; break;
  }
  out.Lambda = angle_of_pitch(d, axis);
  out.lambda = out.Lambda.real;
  out.pitch = -out.Lambda.dual;
  switch (which) {
    case VAxis::V1: out.pitch_integral = int_q.dual; break;
    case VAxis::V2: out.pitch_integral = 0.0; break;
    case VAxis::V3: out.pitch_integral = int_p.dual; break;
  }

  out.drall.reserve(pf.n);
  for (std::size_t i = 0; i < pf.n; ++i) {
    const double p = pf.P[i].real, ps = pf.P[i].dual;
    const double q = pf.Q[i].real, qs = pf.Q[i].dual;
    switch (which) {
      case VAxis::V1: {
        if (std::abs(p) <= tol::drall_denominator) {
          throw DrallSingularity("v_axis_invariants(V1): p = 0 at node " + std::to_string(i), i);
        }
        out.drall.push_back(ps / p);
        break;
      }
      case VAxis::V2: {
        const double den = q * q - p * p;
        if (std::abs(den) <= tol::drall_denominator) {
          throw DrallSingularity("v_axis_invariants(V2): q^2 - p^2 = 0 at node " + std::to_string(i), i);
        }
        out.drall.push_back((q * qs - p * ps) / den);
        break;
      }
      case VAxis::V3: {
        if (std::abs(q) <= tol::drall_denominator) {
          throw DrallSingularity("v_axis_invariants(V3): q = 0 at node " + std::to_string(i), i);
        }
        out.drall.push_back(qs / q);
        break;
      }
    }
  }
  return out;
}

/// Parallel-transfer of the U1/U3 invariants to the V1/V3 surfaces at offset
/// Phi, without touching the V frame itself:
///   Lambda_V1 = cosh(Phi) Lambda_U1 + sinh(Phi) Lambda_U3,
///   Lambda_V3 = -sinh(Phi) Lambda_U1 - cosh(Phi) Lambda_U3
/// in dual arithmetic, and the matching expanded pitch forms.
struct CorollaryPrediction {
  DualScalar Lambda_V1{}, Lambda_V3{};
  double L_V1 = 0.0, L_V3 = 0.0;
};

inline CorollaryPrediction corollary_expand(const InvariantTriple& u1,
                                            const InvariantTriple& u3, DualScalar phi) {
  const DualScalar ch = dcosh(phi), sh = dsinh(phi);
  CorollaryPrediction out;
  out.Lambda_V1 = ch * u1.Lambda + sh * u3.Lambda;
  out.Lambda_V3 = -(sh * u1.Lambda) - ch * u3.Lambda;
  const double c = ch.real, s = sh.real, ps = phi.dual;
  out.L_V1 = c * u1.pitch + s * u3.pitch - ps * (s * u1.lambda + c * u3.lambda);
  out.L_V3 = -(s * u1.pitch + c * u3.pitch) + ps * (c * u1.lambda + s * u3.lambda);
  return out;
}

/// Invariants of the parallel-surface rotation axis Cbar. Requires a uniform
/// (P,Q) causal class and a constant dual angle theta (VaryingTheta otherwise).
/// As with the base axis C, a degenerate drall denominator marks the drall
/// undefined instead of failing the whole surface.
inline InvariantTriple cbar_invariants(const ParallelFrame& pf) {
  if (!pf.case_bar) {
    if (pf.case_bar_issue.find("null") != std::string::npos) {
      throw NullPfaffianBar("cbar_invariants: " + pf.case_bar_issue, pf.case_bar_node);
    }
    throw MixedCase("cbar_invariants: " + pf.case_bar_issue);
  }
  detail::require_constant(pf.theta, "theta", /*theta_flavour=*/true);
  const DualScalar th0 = detail::mean(pf.theta);

  const FrameVector d = steiner_bar(pf);
  const DualScalar int_p = closed_integral(pf.P, pf.period);
  const DualScalar int_q = closed_integral(pf.Q, pf.period);

  InvariantTriple out;
  out.axis = "Cbar";

  FrameVector axis{FrameTag::V, {}, {}, {}};
  if (*pf.case_bar == PsiCase::Spacelike) {
    axis.c1 = dsinh(th0);
    axis.c3 = -dcosh(th0);
  } else {
    axis.c1 = dcosh(th0);
    axis.c3 = -dsinh(th0);
  }
  out.Lambda = angle_of_pitch(d, axis);
  out.lambda = out.Lambda.real;
  out.pitch = -out.Lambda.dual;

  const double c = std::cosh(th0.real), s = std::sinh(th0.real), ts = th0.dual;
  if (*pf.case_bar == PsiCase::Spacelike) {
    out.pitch_integral = c * int_p.dual - s * int_q.dual - ts * (c * int_q.real - s * int_p.real);
  } else {
    out.pitch_integral = s * int_p.dual - c * int_q.dual - ts * (s * int_q.real - c * int_p.real);
  }

  out.drall.reserve(pf.n);
  for (std::size_t i = 0; i < pf.n; ++i) {
    const double p = pf.P[i].real, ps = pf.P[i].dual;
    const double q = pf.Q[i].real, qs = pf.Q[i].dual;
    const double t = pf.theta[i].real, tsn = pf.theta[i].dual;
    const double tp = pf.theta_prime[i].real, tsp = pf.theta_prime[i].dual;
    double den = 0.0;
    double value = 0.0;
    if (*pf.case_bar == PsiCase::Spacelike) {
      value = detail::drall_axis_spacelike(p, q, ps, qs, t, tsn, tp, tsp, &den);
    } else {
      value = detail::drall_axis_timelike(p, q, ps, qs, t, tsn, tp, tsp, &den);
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

/// Coefficient change of a U-frame formal vector to the V frame at offset Phi.
/// The transfer is its own inverse.
inline FrameVector u_to_v(const FrameVector& x, DualScalar phi) {
  if (x.tag != FrameTag::U) throw FrameMismatch("u_to_v: expected U-frame coefficients");
  const DualScalar ch = dcosh(phi), sh = dsinh(phi);
  return {FrameTag::V, ch * x.c1 - sh * x.c3, x.c2, sh * x.c1 - ch * x.c3};
}

}  // namespace rulekin
