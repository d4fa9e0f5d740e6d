#include "latpimc/walk_sampler.hpp"

#include <string>

#include "latpimc/errors.hpp"

namespace latpimc {

WalkSampler::WalkSampler(const ThermoParams& params, int hard_cutoff)
    : p_((params.validate(), params.p)), steps_(params.z(), params.p, hard_cutoff) {}

ClosedWalk WalkSampler::sample_closed_walk(std::int64_t start_site, Rng& rng) {
  ClosedWalk walk;
  walk.positions.resize(static_cast<std::size_t>(p_));
  walk.positions[0] = start_site;
  for (int nu = 0; nu + 1 < p_; ++nu) {
    const std::int64_t residual = walk.positions[nu] - start_site;
    walk.positions[nu + 1] = walk.positions[nu] + steps_.sample(p_ - nu, residual, rng);
  }
  return walk;
}

void WalkSampler::propose_segment(const ClosedWalk& walk, int start, int len,
                                  std::vector<std::int64_t>& interior, Rng& rng) {
  if (walk.size() != p_) throw RangeError("walk length does not match the sampler's Trotter number");
  if (len < 1 || len > p_) {
    throw RangeError("segment length " + std::to_string(len) + " outside 1.." + std::to_string(p_));
  }
  if (start < 0 || start >= p_) throw RangeError("segment start outside the walk");
  const std::int64_t anchor = walk.positions[start];
  const std::int64_t target = len == p_ ? anchor : walk.positions[(start + len) % p_];
  interior.resize(static_cast<std::size_t>(len - 1));
  std::int64_t current = anchor;
  for (int i = 0; i + 1 < len; ++i) {
    current += steps_.sample(len - i, current - target, rng);
    interior[i] = current;
  }
}

void WalkSampler::resample_segment(ClosedWalk& walk, int start, int len, Rng& rng) {
  propose_segment(walk, start, len, scratch_, rng);
  for (int i = 0; i + 1 < len; ++i) walk.positions[(start + 1 + i) % p_] = scratch_[i];
}

ClosedWalk sample_closed_walk(const ThermoParams& params, std::int64_t start_site, Rng& rng) {
  WalkSampler sampler(params);
  return sampler.sample_closed_walk(start_site, rng);
}

ClosedWalk resample_segment(const ClosedWalk& walk, int start, int len, const ThermoParams& params, Rng& rng) {
  WalkSampler sampler(params);
  ClosedWalk out = walk;
  sampler.resample_segment(out, start, len, rng);
  return out;
}

}  // namespace latpimc
