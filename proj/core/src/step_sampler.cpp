#include "latpimc/step_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "latpimc/errors.hpp"

namespace latpimc {
namespace {

constexpr double kTailMass = 1e-12;
constexpr std::size_t kCacheCapacity = 1 << 16;
// Below this the bridge normaliser is too close to underflow to trust the
// addition theorem; the enumerated window is normalised by its own sum instead.
constexpr double kTinyNormaliser = 1e-280;

std::uint64_t cache_key(int r, std::int64_t d) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(r)) << 32) |
         static_cast<std::uint32_t>(static_cast<std::int32_t>(d));
}

}  // namespace

StepSampler::StepSampler(double z, int max_remaining, int hard_cutoff)
    : z_(z), max_remaining_(max_remaining), hard_cutoff_(hard_cutoff) {
  if (!std::isfinite(z) || z < 0.0) {
    throw DomainError("step weight argument must be finite and >= 0");
  }
  if (max_remaining < 1) throw RangeError("max_remaining must be >= 1");
  if (hard_cutoff < 0) throw DomainError("hard_cutoff must be >= 0");
  tail_cutoff_ = step_cutoff(z, kTailMass);
  if (hard_cutoff_ > 0) {
    // W_0 = delta, W_r = w * W_{r-1}; index m + r K.
    const int K = hard_cutoff_;
    const BesselTable one = build_table(z, std::max(K, 2));
    truncated_.resize(static_cast<std::size_t>(max_remaining) + 1);
    truncated_[0] = {1.0};
    for (int r = 1; r <= max_remaining; ++r) {
      const auto& prev = truncated_[r - 1];
      auto& cur = truncated_[r];
      cur.assign(static_cast<std::size_t>(2 * r * K + 1), 0.0);
      for (int m = -(r - 1) * K; m <= (r - 1) * K; ++m) {
        const double base = prev[m + (r - 1) * K];
        if (base == 0.0) continue;
        for (int s = -K; s <= K; ++s) cur[m + s + r * K] += base * one.scaled(s);
      }
    }
  } else {
    tables_.resize(static_cast<std::size_t>(max_remaining) + 1);
    for (int r = 0; r <= max_remaining; ++r) {
      tables_[r] = build_table(r * z, std::max(tail_cutoff_ + 8, 16));
    }
  }
}

double StepSampler::bessel_weight(int r, std::int64_t m) {
  const std::int64_t k = std::abs(m);
  BesselTable& table = tables_[r];
  if (k > table.max_order()) {
    if (k > std::numeric_limits<int>::max() / 4) return 0.0;
    table = build_table(table.argument(), static_cast<int>(std::max<std::int64_t>(2 * table.max_order(), k + 16)));
  }
  return table.scaled(static_cast<int>(k));
}

double StepSampler::single(std::int64_t s) {
  if (hard_cutoff_ > 0) {
    if (std::abs(s) > hard_cutoff_) return 0.0;
    return truncated_[1][s + hard_cutoff_];
  }
  return bessel_weight(1, s);
}

double StepSampler::bridge_weight(int r, std::int64_t m) {
  if (hard_cutoff_ > 0) {
    const std::int64_t span = static_cast<std::int64_t>(r) * hard_cutoff_;
    if (std::abs(m) > span) return 0.0;
    return truncated_[r][m + span];
  }
  return bessel_weight(r, m);
}

StepSampler::Cdf StepSampler::build_cdf(int r, std::int64_t d) {
  Cdf out;
  if (r == 1) {
    if (bridge_weight(1, d) == 0.0 && !(hard_cutoff_ == 0 && z_ > 0.0)) {
      throw DomainError("closing step " + std::to_string(-d) + " has zero weight");
    }
    out.steps = {-d};
    out.cumulative = {1.0};
    return out;
  }
  const double normaliser = bridge_weight(r, d);
  const bool trust_normaliser = normaliser > kTinyNormaliser;
  if (normaliser == 0.0 && (hard_cutoff_ > 0 || z_ == 0.0)) {
    throw DomainError("bridge with " + std::to_string(r) + " steps cannot cancel displacement " +
                      std::to_string(d));
  }
  const std::int64_t limit =
      hard_cutoff_ > 0 ? hard_cutoff_ : std::abs(d) + static_cast<std::int64_t>(tail_cutoff_) + 8;

  std::vector<double> weights;
  double mass = 0.0;
  auto push = [&](std::int64_t s) {
    const double w = single(s) * bridge_weight(r - 1, d + s);
    out.steps.push_back(s);
    weights.push_back(w);
    mass += w;
  };
  for (std::int64_t k = 0; k <= limit; ++k) {
    if (k == 0) {
      push(0);
    } else {
      push(k);
      push(-k);
    }
    if (hard_cutoff_ == 0 && trust_normaliser && mass >= (1.0 - kTailMass) * normaliser) break;
  }
  if (!(mass > 0.0)) {
    throw DomainError("bridge with " + std::to_string(r) + " steps has no weight at displacement " +
                      std::to_string(d));
  }
  // Drop zero-weight entries so a draw can never land on an impossible step.
  Cdf compact;
  double running = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0.0) continue;
    running += weights[i];
    compact.steps.push_back(out.steps[i]);
    compact.cumulative.push_back(running / mass);
  }
  compact.cumulative.back() = 1.0;
  return compact;
}

const StepSampler::Cdf& StepSampler::cdf(int r, std::int64_t d) {
  if (r < 1 || r > max_remaining_) {
    throw RangeError("remaining step count " + std::to_string(r) + " outside 1.." +
                     std::to_string(max_remaining_));
  }
  if (std::abs(d) > std::numeric_limits<std::int32_t>::max()) {
    throw RangeError("bridge displacement too large");
  }
  const std::uint64_t key = cache_key(r, d);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  if (cache_.size() >= kCacheCapacity) cache_.clear();
  return cache_.emplace(key, build_cdf(r, d)).first->second;
}

std::int64_t StepSampler::sample(int r, std::int64_t d, Rng& rng) {
  const Cdf& c = cdf(r, d);
  if (c.steps.size() == 1) return c.steps[0];
  const double u = uniform01(rng);
  std::size_t i = 0;
  while (i + 1 < c.cumulative.size() && !(u < c.cumulative[i])) ++i;
  return c.steps[i];
}

std::vector<std::pair<std::int64_t, double>> StepSampler::distribution(int r, std::int64_t d) {
  const Cdf& c = cdf(r, d);
  std::vector<std::pair<std::int64_t, double>> out;
  double prev = 0.0;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    out.emplace_back(c.steps[i], c.cumulative[i] - prev);
    prev = c.cumulative[i];
  }
  return out;
}

}  // namespace latpimc
