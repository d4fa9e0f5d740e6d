#pragma once

#include <cstdint>
#include <vector>

#include "latpimc/lattice.hpp"
#include "latpimc/rng.hpp"
#include "latpimc/step_sampler.hpp"
#include "latpimc/walk.hpp"

namespace latpimc {

/// Generates closed walks from the free-particle measure prod_alpha I_{s_alpha}(z)
/// and redraws contiguous segments of an existing walk as pinned bridges.
class WalkSampler {
 public:
  explicit WalkSampler(const ThermoParams& params, int hard_cutoff = 0);

  int p() const noexcept { return p_; }
  StepSampler& steps() noexcept { return steps_; }

  /// Fresh closed walk whose first position is `start_site`.
  ClosedWalk sample_closed_walk(std::int64_t start_site, Rng& rng);

  /// Redraws the len - 1 positions strictly inside the segment that starts at
  /// index `start`; positions[start] and positions[(start+len) % p] stay fixed.
  /// The new interior is written to `interior` (interior[i] replaces
  /// positions[(start+1+i) % p]). Throws RangeError unless 1 <= len <= p and
  /// 0 <= start < p.
  void propose_segment(const ClosedWalk& walk, int start, int len, std::vector<std::int64_t>& interior,
                       Rng& rng);

  /// In-place segment redraw (propose_segment followed by a write-back).
  void resample_segment(ClosedWalk& walk, int start, int len, Rng& rng);

 private:
  int p_;
  StepSampler steps_;
  std::vector<std::int64_t> scratch_;
};

ClosedWalk sample_closed_walk(const ThermoParams& params, std::int64_t start_site, Rng& rng);
ClosedWalk resample_segment(const ClosedWalk& walk, int start, int len, const ThermoParams& params, Rng& rng);

}  // namespace latpimc
