#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <sstream>

#include "latpimc/errors.hpp"

namespace latpimc {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  int min_points = 64;
  int max_points = 1 << 20;
};

template <std::size_t K>
struct QuadratureResult {
  std::array<double, K> value{};
  int points = 0;
  double achieved_tol = 0.0;
};

/// Integrates K periodic functions over [0, 2 pi) simultaneously.
///
/// Uses the midpoint rule on N = min_points * 2^k cells, which is spectrally
/// accurate for smooth periodic integrands; the half-cell offset keeps nodes off
/// u = pi/2 and 3 pi/2 whenever N is a multiple of 4. Doubling stops once every
/// component changes by at most rel_tol times its integral of |f|. `f(u)` must
/// return std::array<double, K>.
template <std::size_t K, class F>
QuadratureResult<K> integrate_periodic(F&& f, const QuadratureSpec& spec = {}) {
  if (spec.min_points < 4 || spec.max_points < spec.min_points || !(spec.rel_tol > 0.0)) {
    throw DomainError("invalid quadrature specification");
  }
  const double two_pi = 2.0 * std::numbers::pi;
  auto rule = [&](int n, std::array<double, K>& sum, std::array<double, K>& abs_sum) {
    sum.fill(0.0);
    abs_sum.fill(0.0);
    const double h = two_pi / n;
    for (int i = 0; i < n; ++i) {
      const std::array<double, K> v = f((i + 0.5) * h);
      for (std::size_t k = 0; k < K; ++k) {
        if (!std::isfinite(v[k])) throw DomainError("quadrature integrand is not finite");
        sum[k] += v[k];
        abs_sum[k] += std::abs(v[k]);
      }
    }
    for (std::size_t k = 0; k < K; ++k) {
      sum[k] *= h;
      abs_sum[k] *= h;
    }
  };

  QuadratureResult<K> result;
  std::array<double, K> prev{}, abs_prev{};
  int n = spec.min_points;
  rule(n, prev, abs_prev);
  double worst = 0.0;
  while (2 * n <= spec.max_points) {
    n *= 2;
    std::array<double, K> cur{}, abs_cur{};
    rule(n, cur, abs_cur);
    worst = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      const double scale = abs_cur[k];
      const double diff = std::abs(cur[k] - prev[k]);
      const double rel = scale > 0.0 ? diff / scale : 0.0;
      worst = std::max(worst, rel);
    }
    prev = cur;
    if (worst <= spec.rel_tol) {
      result.value = cur;
      result.points = n;
      result.achieved_tol = worst;
      return result;
    }
  }
  std::ostringstream msg;
  msg << "periodic quadrature did not reach relative tolerance " << spec.rel_tol << " with "
      << n << " points (achieved " << worst << ")";
  throw NumericError(msg.str(), prev[0], worst);
}

/// Scalar convenience wrapper around integrate_periodic.
double integrate_periodic_scalar(const std::function<double(double)>& f,
                                 const QuadratureSpec& spec = {});

}  // namespace latpimc
