#include "latpimc/estimators.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "latpimc/errors.hpp"

namespace latpimc {

ObservableEvaluator::ObservableEvaluator(const ThermoParams& params, const LatticeConfig& config, int n_max)
    : params_(params), config_(config), n_max_(n_max) {
  params_.validate();
  if (n_max < 0) throw ConfigError("n_max must be >= 0");
  table_ = build_table(params_.z(), std::max(n_max_ + 16, 32));
}

void ObservableEvaluator::ensure_order(int order) {
  if (order > table_.max_order()) {
    table_ = build_table(params_.z(), std::max(order + 16, 2 * table_.max_order()));
  }
}

int ObservableEvaluator::max_abs_step(const ClosedWalk& walk) const {
  std::int64_t m = 0;
  for (int a = 0; a < walk.size(); ++a) m = std::max(m, std::abs(walk.step(a)));
  if (m > std::numeric_limits<int>::max() / 4) throw RangeError("walk step too large for a Bessel table");
  return static_cast<int>(m);
}

double ObservableEvaluator::kinetic(const ClosedWalk& walk) {
  ensure_order(max_abs_step(walk) + 1);
  double sum = 0.0;
  for (int a = 0; a < walk.size(); ++a) sum += dlog1(static_cast<int>(walk.step(a)), table_);
  const double t = params_.t;
  return 2.0 * t - (2.0 * t / params_.p) * sum;
}

double ObservableEvaluator::kinetic_sq(const ClosedWalk& walk) {
  ensure_order(max_abs_step(walk) + 2);
  double d1 = 0.0;
  double d2 = 0.0;
  for (int a = 0; a < walk.size(); ++a) {
    const int s = static_cast<int>(walk.step(a));
    d1 += dlog1(s, table_);
    d2 += dlog2(s, table_);
  }
  const double t2 = params_.t * params_.t;
  return (4.0 * t2 / params_.p) * d2 - (8.0 * t2 / params_.p) * d1 + 4.0 * t2;
}

double ObservableEvaluator::g1(const ClosedWalk& walk, int n) {
  ensure_order(max_abs_step(walk) + std::abs(n));
  double sum = 0.0;
  // Index j_alpha - j_{alpha+1} - n, i.e. -s_alpha - n.
  for (int a = 0; a < walk.size(); ++a) {
    const int s = static_cast<int>(walk.step(a));
    sum += table_.scaled(-s - n) / table_.scaled(s);
  }
  return sum / walk.size();
}

double ObservableEvaluator::g2(const ClosedWalk& walk, int n) const {
  double sum = 0.0;
  for (auto j : walk.positions) sum += config_.occupancy_at(j - n);
  return sum / walk.size();
}

double ObservableEvaluator::potential(const ClosedWalk& walk) const {
  double sum = 0.0;
  for (auto j : walk.positions) sum += config_.potential_at(j);
  return sum / walk.size();
}

void ObservableEvaluator::evaluate(const ClosedWalk& walk, ObservableSample& out) {
  const int p = walk.size();
  const int smax = max_abs_step(walk);
  ensure_order(smax + std::max(2, n_max_));
  const auto f = table_.scaled_values();
  const double t = params_.t;

  double d1 = 0.0;
  double d2 = 0.0;
  out.gamma1.assign(static_cast<std::size_t>(n_max_) + 1, 0.0);
  for (int a = 0; a < p; ++a) {
    const int s = static_cast<int>(walk.step(a));
    const int k = std::abs(s);
    const double inv = 1.0 / f[k];
    d1 += 0.5 * (f[std::abs(k - 1)] + f[k + 1]) * inv;
    d2 += 0.25 * (f[std::abs(k - 2)] + 2.0 * f[k] + f[k + 2]) * inv;
    for (int n = 0; n <= n_max_; ++n) out.gamma1[n] += f[std::abs(-s - n)] * inv;
  }
  for (auto& g : out.gamma1) g /= p;
  out.tau = 2.0 * t - (2.0 * t / p) * d1;
  out.tau2 = (4.0 * t * t / p) * d2 - (8.0 * t * t / p) * d1 + 4.0 * t * t;

  out.gamma2.assign(static_cast<std::size_t>(n_max_) + 1, 0.0);
  double v = 0.0;
  for (auto j : walk.positions) {
    v += config_.potential_at(j);
    for (int n = 0; n <= n_max_; ++n) out.gamma2[n] += config_.occupancy_at(j - n);
  }
  out.v = v / p;
  for (auto& g : out.gamma2) g /= p;
}

ObservableSample ObservableEvaluator::evaluate(const ClosedWalk& walk) {
  ObservableSample out;
  evaluate(walk, out);
  return out;
}

namespace {

BesselTable table_for(const ClosedWalk& walk, const ThermoParams& params, int extra) {
  params.validate();
  std::int64_t m = 0;
  for (int a = 0; a < walk.size(); ++a) m = std::max(m, std::abs(walk.step(a)));
  return build_table(params.z(), std::max<int>(static_cast<int>(m) + extra, 2));
}

}  // namespace

double kinetic_estimator(const ClosedWalk& walk, const ThermoParams& params) {
  const BesselTable tab = table_for(walk, params, 1);
  double sum = 0.0;
  for (int a = 0; a < walk.size(); ++a) sum += dlog1(static_cast<int>(walk.step(a)), tab);
  return 2.0 * params.t - (2.0 * params.t / walk.size()) * sum;
}

double kinetic_sq_estimator(const ClosedWalk& walk, const ThermoParams& params) {
  const BesselTable tab = table_for(walk, params, 2);
  double d1 = 0.0;
  double d2 = 0.0;
  for (int a = 0; a < walk.size(); ++a) {
    const int s = static_cast<int>(walk.step(a));
    d1 += dlog1(s, tab);
    d2 += dlog2(s, tab);
  }
  const double t2 = params.t * params.t;
  const int p = walk.size();
  return (4.0 * t2 / p) * d2 - (8.0 * t2 / p) * d1 + 4.0 * t2;
}

double g1_estimator(const ClosedWalk& walk, int n, const ThermoParams& params) {
  const BesselTable tab = table_for(walk, params, std::abs(n));
  double sum = 0.0;
  for (int a = 0; a < walk.size(); ++a) {
    const int s = static_cast<int>(walk.step(a));
    sum += tab.scaled(-s - n) / tab.scaled(s);
  }
  return sum / walk.size();
}

double g2_estimator(const ClosedWalk& walk, int n, const LatticeConfig& config) {
  double sum = 0.0;
  for (auto j : walk.positions) sum += config.occupancy_at(j - n);
  return sum / walk.size();
}

double potential_estimator(const ClosedWalk& walk, const LatticeConfig& config) {
  double sum = 0.0;
  for (auto j : walk.positions) sum += config.potential_at(j);
  return sum / walk.size();
}

}  // namespace latpimc
