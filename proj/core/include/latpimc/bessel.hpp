#pragma once

#include <span>
#include <vector>

namespace latpimc {

/// Exponentially scaled modified Bessel functions e^{-z} I_n(z) of integer
/// order n = 0..max_order at a fixed argument z >= 0.
///
/// Values are produced by a downward (Miller) recurrence normalised with the
/// sum rule I_0(z) + 2 sum_{n>=1} I_n(z) = e^z, so no unscaled I_n is ever
/// formed and arguments in the hundreds are safe. Negative orders are served
/// through I_{-n} = I_n.
class BesselTable {
 public:
  BesselTable() = default;

  double argument() const noexcept { return z_; }
  int max_order() const noexcept { return static_cast<int>(scaled_.size()) - 1; }

  /// e^{-z} I_n(z); throws RangeError when |n| > max_order().
  double scaled(int n) const;

  std::span<const double> scaled_values() const noexcept { return scaled_; }

 private:
  friend BesselTable build_table(double z, int max_order);

  double z_ = 0.0;
  std::vector<double> scaled_{1.0, 0.0, 0.0};
};

/// Throws DomainError for negative or non-finite z, or max_order < 2.
BesselTable build_table(double z, int max_order);

/// I_n(z) / I_m(z).
double ratio(int n, int m, const BesselTable& table);

/// I'_n(z) / I_n(z) = (I_{n-1} + I_{n+1}) / (2 I_n). Requires |n|+1 <= max_order.
double dlog1(int n, const BesselTable& table);

/// I''_n(z) / I_n(z) = (I_{n-2} + 2 I_n + I_{n+2}) / (4 I_n). Requires |n|+2 <= max_order.
double dlog2(int n, const BesselTable& table);

/// Smallest s_max such that the two-sided tail 2 sum_{s > s_max} e^{-z} I_s(z)
/// is below tail_mass. Returns 0 for z == 0.
int step_cutoff(double z, double tail_mass = 1e-12);

}  // namespace latpimc
