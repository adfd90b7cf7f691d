#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rulekin/dual.hpp"
#include "rulekin/errors.hpp"
#include "rulekin/minkowski.hpp"

namespace rulekin {

/// Derivative of a T-periodic sequence sampled at t_i = i*period/n, by the
/// 4th-order central stencils
///   f'  ~ (f[i-2] - 8 f[i-1] + 8 f[i+1] - f[i+2]) / (12 h)
///   f'' ~ (-f[i-2] + 16 f[i-1] - 30 f[i] + 16 f[i+1] - f[i+2]) / (12 h^2)
/// with periodic wraparound. `order` selects the first or second derivative.
/// Error decays like h^4 (factor ~16 per doubling of n) on smooth data.
template <class T>
std::vector<T> diff_periodic(const std::vector<T>& f, double period, int order = 1) {
  const std::size_t n = f.size();
  if (n < 5) throw BadSpec("diff_periodic: need at least 5 samples, got " + std::to_string(n));
  if (!(period > 0.0)) throw BadSpec("diff_periodic: period must be positive");
  if (order != 1 && order != 2) throw BadSpec("diff_periodic: order must be 1 or 2");

  const double h = period / static_cast<double>(n);
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const T& m2 = f[(i + n - 2) % n];
    const T& m1 = f[(i + n - 1) % n];
    const T& p1 = f[(i + 1) % n];
    const T& p2 = f[(i + 2) % n];
    if (order == 1) {
      out.push_back((1.0 / (12.0 * h)) * (m2 - 8.0 * m1 + 8.0 * p1 - p2));
    } else {
      out.push_back((1.0 / (12.0 * h * h)) *
                    (-1.0 * m2 + 16.0 * m1 - 30.0 * f[i] + 16.0 * p1 - p2));
    }
  }
  return out;
}

namespace detail {
/// Kahan compensated accumulator; keeps closed-loop quadrature at machine
/// accuracy independent of n.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};
}  // namespace detail

/// Integral over one full period of a T-periodic sequence sampled at
/// t_i = i*period/n. On a periodic uniform grid the trapezoid rule collapses
/// to h * sum(f_i); it is exact for trigonometric polynomials below the
/// Nyquist harmonic and spectrally accurate for analytic integrands.
inline double closed_integral(const std::vector<double>& f, double period) {
  if (f.empty()) throw BadSpec("closed_integral: empty sample vector");
  if (!(period > 0.0)) throw BadSpec("closed_integral: period must be positive");
  detail::KahanSum acc;
  for (double x : f) acc.add(x);
  return acc.sum * (period / static_cast<double>(f.size()));
}

inline DualScalar closed_integral(const std::vector<DualScalar>& f, double period) {
  if (f.empty()) throw BadSpec("closed_integral: empty sample vector");
  if (!(period > 0.0)) throw BadSpec("closed_integral: period must be positive");
  detail::KahanSum re, du;
  for (DualScalar x : f) {
    re.add(x.real);
    du.add(x.dual);
  }
  const double h = period / static_cast<double>(f.size());
  return {re.sum * h, du.sum * h};
}

}  // namespace rulekin
