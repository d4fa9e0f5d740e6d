#include "latpimc/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "latpimc/errors.hpp"

namespace latpimc {
namespace {

// Below this the table is the leading term of the power series: I_0 = 1,
// I_1 = z/2 and every higher order underflows.
constexpr double kTinyArgument = 1e-150;
constexpr double kRescaleThreshold = 1e200;

int recurrence_start(double z, int max_order) {
  const double top = std::max(static_cast<double>(max_order), std::ceil(z));
  return static_cast<int>(top) + 40 + static_cast<int>(std::ceil(std::sqrt(40.0 * top)));
}

std::vector<double> miller(double z, int max_order) {
  const int start = recurrence_start(z, max_order);
  std::vector<double> f(static_cast<std::size_t>(start) + 2, 0.0);
  f[start] = 1.0;
  for (int n = start; n >= 1; --n) {
    f[n - 1] = f[n + 1] + (2.0 * n / z) * f[n];
    if (f[n - 1] > kRescaleThreshold) {
      for (int k = n - 1; k <= start; ++k) f[k] /= kRescaleThreshold;
    }
  }
  // Accumulate the sum rule from the small end upwards; the large-n tail is
  // negligible and would only add rounding noise first.
  double norm = f[0];
  for (int n = 1; n <= start; ++n) norm += 2.0 * f[n];
  std::vector<double> out(static_cast<std::size_t>(max_order) + 1);
  for (int n = 0; n <= max_order; ++n) out[n] = f[n] / norm;
  return out;
}

}  // namespace

double BesselTable::scaled(int n) const {
  const int k = std::abs(n);
  if (k > max_order()) {
    throw RangeError("Bessel order " + std::to_string(n) + " outside table of max order " +
                     std::to_string(max_order()));
  }
  return scaled_[k];
}

BesselTable build_table(double z, int max_order) {
  if (!std::isfinite(z) || z < 0.0) {
    throw DomainError("Bessel argument must be finite and non-negative, got " + std::to_string(z));
  }
  if (max_order < 2) {
    throw DomainError("Bessel table needs max_order >= 2");
  }
  BesselTable table;
  table.z_ = z;
  if (z == 0.0) {
    table.scaled_.assign(static_cast<std::size_t>(max_order) + 1, 0.0);
    table.scaled_[0] = 1.0;
  } else if (z < kTinyArgument) {
    table.scaled_.assign(static_cast<std::size_t>(max_order) + 1, 0.0);
    table.scaled_[0] = 1.0;
    table.scaled_[1] = 0.5 * z;
  } else {
    table.scaled_ = miller(z, max_order);
  }
  return table;
}

double ratio(int n, int m, const BesselTable& table) {
  return table.scaled(n) / table.scaled(m);
}

double dlog1(int n, const BesselTable& table) {
  const int k = std::abs(n);
  if (k + 1 > table.max_order()) {
    throw RangeError("dlog1 needs order " + std::to_string(k + 1));
  }
  const auto f = table.scaled_values();
  const double below = k == 0 ? f[1] : f[k - 1];
  return (below + f[k + 1]) / (2.0 * f[k]);
}

double dlog2(int n, const BesselTable& table) {
  const int k = std::abs(n);
  if (k + 2 > table.max_order()) {
    throw RangeError("dlog2 needs order " + std::to_string(k + 2));
  }
  const auto f = table.scaled_values();
  const double below = f[std::abs(k - 2)];
  return (below + 2.0 * f[k] + f[k + 2]) / (4.0 * f[k]);
}

int step_cutoff(double z, double tail_mass) {
  if (z == 0.0) return 0;
  int order = static_cast<int>(std::ceil(z)) + 64;
  for (;;) {
    const BesselTable table = build_table(z, order);
    const auto f = table.scaled_values();
    // Walk down from the top while the two-sided tail stays below tail_mass.
    double tail = 0.0;
    int s = order;
    while (s > 0 && tail + 2.0 * f[s] < tail_mass) {
      tail += 2.0 * f[s];
      --s;
    }
    if (s < order) return s;
    order *= 2;
  }
}

}  // namespace latpimc
