#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "latpimc/lattice.hpp"
#include "latpimc/rng.hpp"
#include "latpimc/walk.hpp"
#include "latpimc/walk_sampler.hpp"

namespace latpimc {

struct Schedule {
  long burn_in = -1;  // negative: 10 * p proposals
  long n_samples = 100000;
  long thin = 50;
  double segment_fraction = 0.2;
  // Share of proposals that rigidly translate the whole walk by +/-k sites
  // (k uniform in 1..L/2). Segment redraws keep their endpoints, so at small
  // beta, where walks are nearly constant, they cannot move the walk between
  // sublattices on their own.
  double translation_probability = 0.2;
  int hard_cutoff = 0;  // forwarded to StepSampler; 0 = untruncated steps

  void validate() const;
  long effective_burn_in(int p) const { return burn_in < 0 ? 10L * p : burn_in; }
};

/// Metropolis chain over closed walks targeting the free walk measure times
/// exp(-(beta/p) sum_alpha V(j_alpha)). Proposals are drawn from the free
/// measure itself, so the acceptance factor only involves the potential.
class MetropolisChain {
 public:
  MetropolisChain(const LatticeConfig& config, const ThermoParams& params, const Schedule& schedule, Rng rng);

  /// One proposal; returns whether it was accepted.
  bool step();

  const ClosedWalk& walk() const noexcept { return walk_; }
  double potential_sum() const noexcept { return potential_sum_; }
  long proposals() const noexcept { return proposals_; }
  long accepted() const noexcept { return accepted_; }
  double acceptance_rate() const noexcept {
    return proposals_ == 0 ? 0.0 : static_cast<double>(accepted_) / static_cast<double>(proposals_);
  }
  int segment_length() const noexcept { return segment_length_; }

  /// Accepts with probability min(1, exp(-(beta/p) * delta_potential_sum)).
  bool accept(double delta_potential_sum);

 private:
  bool segment_move();
  bool translation_move();

  const LatticeConfig& config_;
  ThermoParams params_;
  Schedule schedule_;
  Rng rng_;
  WalkSampler sampler_;
  ClosedWalk walk_;
  double potential_sum_ = 0.0;
  int segment_length_ = 1;
  long proposals_ = 0;
  long accepted_ = 0;
  std::vector<std::int64_t> interior_;
};

double potential_sum(const ClosedWalk& walk, const LatticeConfig& config);

struct ChainReport {
  long proposals = 0;
  long accepted = 0;
  long samples = 0;
  bool direct = false;  // walks were drawn independently (no potential to reweight)
  double acceptance_rate() const noexcept {
    return proposals == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(proposals);
  }
};

/// Emits schedule.n_samples walks to `sink`. When beta * max|V| = 0 every
/// proposal would be accepted, and walks are drawn directly as independent free
/// walks from uniform start sites; otherwise a MetropolisChain is burned in and
/// sampled every `thin` proposals.
ChainReport run_chain(const LatticeConfig& config, const ThermoParams& params, const Schedule& schedule,
                      Rng& rng, const std::function<void(const ClosedWalk&)>& sink);

}  // namespace latpimc
