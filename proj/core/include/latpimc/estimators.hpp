#pragma once

#include <vector>

#include "latpimc/bessel.hpp"
#include "latpimc/lattice.hpp"
#include "latpimc/walk.hpp"

namespace latpimc {

/// Per-walk values of the classical estimators.
struct ObservableSample {
  double tau = 0.0;   // kinetic energy, estimates <H> for the free part
  double tau2 = 0.0;  // estimates <H_kin^2>
  double v = 0.0;     // mean on-site potential along the walk
  std::vector<double> gamma1;  // n = 0..n_max
  std::vector<double> gamma2;  // n = 0..n_max
};

/// Evaluates every estimator on a walk, reusing one Bessel table at
/// z = 2 beta t / p that grows when a walk carries a larger step.
class ObservableEvaluator {
 public:
  ObservableEvaluator(const ThermoParams& params, const LatticeConfig& config, int n_max = 10);

  int n_max() const noexcept { return n_max_; }

  ObservableSample evaluate(const ClosedWalk& walk);
  void evaluate(const ClosedWalk& walk, ObservableSample& out);

  double kinetic(const ClosedWalk& walk);
  double kinetic_sq(const ClosedWalk& walk);
  double g1(const ClosedWalk& walk, int n);
  double g2(const ClosedWalk& walk, int n) const;
  double potential(const ClosedWalk& walk) const;

 private:
  void ensure_order(int order);
  int max_abs_step(const ClosedWalk& walk) const;

  ThermoParams params_;
  const LatticeConfig& config_;
  int n_max_;
  BesselTable table_;
};

// Stateless conveniences; each builds its own Bessel table.
double kinetic_estimator(const ClosedWalk& walk, const ThermoParams& params);
double kinetic_sq_estimator(const ClosedWalk& walk, const ThermoParams& params);
double g1_estimator(const ClosedWalk& walk, int n, const ThermoParams& params);
double g2_estimator(const ClosedWalk& walk, int n, const LatticeConfig& config);
double potential_estimator(const ClosedWalk& walk, const LatticeConfig& config);

}  // namespace latpimc
