#include "latpimc/metropolis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "latpimc/errors.hpp"

namespace latpimc {

void Schedule::validate() const {
  if (n_samples < 1) throw ConfigError("n_samples must be >= 1");
  if (thin < 1) throw ConfigError("thin must be >= 1");
  if (!(segment_fraction > 0.0 && segment_fraction <= 1.0)) {
    throw ConfigError("segment_fraction must lie in (0, 1], got " + std::to_string(segment_fraction));
  }
  if (!(translation_probability >= 0.0 && translation_probability < 1.0)) {
    throw ConfigError("translation_probability must lie in [0, 1)");
  }
  if (hard_cutoff < 0) throw ConfigError("hard_cutoff must be >= 0");
}

double potential_sum(const ClosedWalk& walk, const LatticeConfig& config) {
  double sum = 0.0;
  for (auto j : walk.positions) sum += config.potential_at(j);
  return sum;
}

MetropolisChain::MetropolisChain(const LatticeConfig& config, const ThermoParams& params,
                                 const Schedule& schedule, Rng rng)
    : config_(config),
      params_(params),
      schedule_(schedule),
      rng_(std::move(rng)),
      sampler_(params, schedule.hard_cutoff) {
  schedule_.validate();
  segment_length_ = std::clamp(static_cast<int>(std::lround(schedule_.segment_fraction * params_.p)), 1,
                               params_.p);
  const auto start = static_cast<std::int64_t>(uniform_below(rng_, static_cast<std::uint64_t>(config_.size())));
  walk_ = sampler_.sample_closed_walk(start, rng_);
  potential_sum_ = latpimc::potential_sum(walk_, config_);
}

bool MetropolisChain::accept(double delta) {
  if (delta <= 0.0) return true;
  const double q = std::exp(-(params_.beta / params_.p) * delta);
  return uniform01(rng_) < q;
}

bool MetropolisChain::segment_move() {
  const int start = static_cast<int>(uniform_below(rng_, static_cast<std::uint64_t>(params_.p)));
  const int len = segment_length_;
  sampler_.propose_segment(walk_, start, len, interior_, rng_);
  double delta = 0.0;
  for (int i = 0; i + 1 < len; ++i) {
    const std::int64_t old_pos = walk_.positions[(start + 1 + i) % params_.p];
    delta += config_.potential_at(interior_[i]) - config_.potential_at(old_pos);
  }
  if (!accept(delta)) return false;
  for (int i = 0; i + 1 < len; ++i) walk_.positions[(start + 1 + i) % params_.p] = interior_[i];
  potential_sum_ += delta;
  return true;
}

bool MetropolisChain::translation_move() {
  const int half = std::max(1, config_.size() / 2);
  const auto k = static_cast<std::int64_t>(1 + uniform_below(rng_, static_cast<std::uint64_t>(half)));
  const std::int64_t shift = (rng_() >> 63) != 0 ? k : -k;
  double shifted = 0.0;
  for (auto j : walk_.positions) shifted += config_.potential_at(j + shift);
  if (!accept(shifted - potential_sum_)) return false;
  for (auto& j : walk_.positions) j += shift;
  potential_sum_ = shifted;
  return true;
}

bool MetropolisChain::step() {
  ++proposals_;
  bool ok = false;
  if (schedule_.translation_probability > 0.0 && uniform01(rng_) < schedule_.translation_probability) {
    ok = translation_move();
  } else {
    ok = segment_move();
  }
  if (ok) ++accepted_;
  return ok;
}

ChainReport run_chain(const LatticeConfig& config, const ThermoParams& params, const Schedule& schedule,
                      Rng& rng, const std::function<void(const ClosedWalk&)>& sink) {
  params.validate();
  schedule.validate();
  ChainReport report;
  if (params.beta * config.max_potential() == 0.0) {
    report.direct = true;
    WalkSampler sampler(params, schedule.hard_cutoff);
    for (long i = 0; i < schedule.n_samples; ++i) {
      const auto start = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(config.size())));
      sink(sampler.sample_closed_walk(start, rng));
    }
    report.proposals = report.accepted = report.samples = schedule.n_samples;
    return report;
  }
  MetropolisChain chain(config, params, schedule, Rng(rng()));
  const long burn = schedule.effective_burn_in(params.p);
  for (long i = 0; i < burn; ++i) chain.step();
  const long burn_proposals = chain.proposals();
  const long burn_accepted = chain.accepted();
  for (long i = 0; i < schedule.n_samples; ++i) {
    for (long k = 0; k < schedule.thin; ++k) chain.step();
    sink(chain.walk());
  }
  report.proposals = chain.proposals() - burn_proposals;
  report.accepted = chain.accepted() - burn_accepted;
  report.samples = schedule.n_samples;
  return report;
}

}  // namespace latpimc
