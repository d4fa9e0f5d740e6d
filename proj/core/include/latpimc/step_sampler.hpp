#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latpimc/bessel.hpp"
#include "latpimc/rng.hpp"

namespace latpimc {

/// Conditional step law of a free lattice bridge.
///
/// With r steps left and residual displacement d (current position minus the
/// position the bridge must reach), the next step s is drawn with probability
///
///   P(s | r, d) = w(s) W_{r-1}(d + s) / W_r(d),
///
/// where w(s) = e^{-z} I_s(z) is the single-step weight and W_r the r-fold
/// convolution of w. By the Bessel addition theorem W_r(m) = e^{-rz} I_m(rz), so
/// by default no explicit convolution is needed and the step support is the
/// whole integer line (enumerated 0, +1, -1, +2, ... until the omitted mass is
/// below 1e-12).
///
/// A positive `hard_cutoff` K instead restricts every step to |s| <= K and uses
/// exact convolution tables of the truncated kernel, giving the exact
/// conditionals of the truncated walk measure. It exists for validation against
/// exhaustive enumeration and costs O(max_remaining^2 K^2) memory-light setup.
class StepSampler {
 public:
  StepSampler(double z, int max_remaining, int hard_cutoff = 0);

  double z() const noexcept { return z_; }
  int max_remaining() const noexcept { return max_remaining_; }
  int hard_cutoff() const noexcept { return hard_cutoff_; }

  /// Draws one step. Throws RangeError if r < 1 or r > max_remaining(), and
  /// DomainError if the bridge (r, d) has zero weight.
  std::int64_t sample(int r, std::int64_t d, Rng& rng);

  /// Full conditional law as (step, probability) pairs in enumeration order.
  std::vector<std::pair<std::int64_t, double>> distribution(int r, std::int64_t d);

 private:
  struct Cdf {
    std::vector<std::int64_t> steps;
    std::vector<double> cumulative;
  };

  const Cdf& cdf(int r, std::int64_t d);
  Cdf build_cdf(int r, std::int64_t d);
  double single(std::int64_t s);
  double bridge_weight(int r, std::int64_t m);
  double bessel_weight(int r, std::int64_t m);

  double z_;
  int max_remaining_;
  int hard_cutoff_;
  int tail_cutoff_;
  std::vector<BesselTable> tables_;             // e^{-rz} I_m(rz), grown on demand
  std::vector<std::vector<double>> truncated_;  // W_r(m) for |m| <= r K
  std::unordered_map<std::uint64_t, Cdf> cache_;
};

}  // namespace latpimc
