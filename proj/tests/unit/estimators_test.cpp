#include <gtest/gtest.h>

#include <cmath>

#include "latpimc/errors.hpp"
#include "latpimc/estimators.hpp"
#include "latpimc/exact_free.hpp"
#include "latpimc/rng.hpp"
#include "latpimc/statistics.hpp"
#include "latpimc/walk_sampler.hpp"

using latpimc::ClosedWalk;
using latpimc::LatticeConfig;
using latpimc::ObservableEvaluator;

TEST(Estimators, ConstantWalkSmallArgument) {
  // For a walk that never moves and z -> 0 the first log-derivative ratio
  // I_1/I_0 vanishes and the second tends to 1/2.
  const auto params = latpimc::make_params(1e-6, 10);
  const ClosedWalk w{std::vector<std::int64_t>(10, 4)};
  EXPECT_NEAR(latpimc::kinetic_estimator(w, params), 2.0, 1e-6);
  EXPECT_NEAR(latpimc::kinetic_sq_estimator(w, params), 6.0, 1e-5);
  const auto p3 = latpimc::make_params(1e-6, 10, 3.0);
  EXPECT_NEAR(latpimc::kinetic_estimator(w, p3), 6.0, 1e-5);
  EXPECT_NEAR(latpimc::kinetic_sq_estimator(w, p3), 54.0, 1e-4);
}

TEST(Estimators, CorrelationAtZeroOffsetIsOne) {
  auto rng = latpimc::make_stream(30, 0);
  const auto params = latpimc::make_params(3.0, 24);
  latpimc::WalkSampler sampler(params);
  for (int i = 0; i < 50; ++i) {
    const auto w = sampler.sample_closed_walk(0, rng);
    EXPECT_NEAR(latpimc::g1_estimator(w, 0, params), 1.0, 1e-14);
  }
}

TEST(Estimators, ReversalMapsOffsetToMinusOffset) {
  auto rng = latpimc::make_stream(31, 0);
  const auto params = latpimc::make_params(2.0, 16);
  latpimc::WalkSampler sampler(params);
  const auto w = sampler.sample_closed_walk(0, rng);
  ClosedWalk mirrored = w;
  for (auto& j : mirrored.positions) j = -j;
  for (int n = 1; n <= 4; ++n) {
    EXPECT_NEAR(latpimc::g1_estimator(w, n, params), latpimc::g1_estimator(mirrored, -n, params), 1e-13);
  }
  EXPECT_DOUBLE_EQ(latpimc::kinetic_estimator(w, params), latpimc::kinetic_estimator(mirrored, params));
}

TEST(Estimators, OccupancyCorrelationParity) {
  const auto cfg = LatticeConfig::striped(10, 10.0);
  const ClosedWalk on_occupied{{1, 1, 3, 5}};
  const ClosedWalk mixed{{0, 1, 1, 2}};
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(latpimc::g2_estimator(on_occupied, n, cfg), n % 2 == 0 ? 1.0 : 0.0);
    EXPECT_EQ(latpimc::g2_estimator(mixed, n, cfg), n % 2 == 0 ? 0.5 : 0.5);
  }
  EXPECT_EQ(latpimc::potential_estimator(on_occupied, cfg), 10.0);
  EXPECT_EQ(latpimc::potential_estimator(mixed, cfg), 5.0);
}

TEST(Estimators, FreeLatticeHasNoPotentialOrOccupancy) {
  const auto cfg = LatticeConfig::free(8);
  const ClosedWalk w{{0, 3, 2, 1}};
  EXPECT_EQ(latpimc::potential_estimator(w, cfg), 0.0);
  for (int n = 0; n < 3; ++n) EXPECT_EQ(latpimc::g2_estimator(w, n, cfg), 0.0);
}

TEST(Estimators, EvaluatorAgreesWithFreeFunctions) {
  auto rng = latpimc::make_stream(32, 0);
  const auto params = latpimc::make_params(7.0, 30, 1.5);
  const auto cfg = LatticeConfig::striped(20, 4.0);
  latpimc::WalkSampler sampler(params);
  ObservableEvaluator ev(params, cfg, 6);
  for (int i = 0; i < 40; ++i) {
    const auto w = sampler.sample_closed_walk(static_cast<std::int64_t>(i) - 7, rng);
    const auto obs = ev.evaluate(w);
    EXPECT_NEAR(obs.tau, latpimc::kinetic_estimator(w, params), 1e-12);
    EXPECT_NEAR(obs.tau2, latpimc::kinetic_sq_estimator(w, params), 1e-11);
    EXPECT_NEAR(obs.tau, ev.kinetic(w), 1e-12);
    EXPECT_NEAR(obs.tau2, ev.kinetic_sq(w), 1e-11);
    EXPECT_DOUBLE_EQ(obs.v, latpimc::potential_estimator(w, cfg));
    ASSERT_EQ(obs.gamma1.size(), 7u);
    for (int n = 0; n <= 6; ++n) {
      EXPECT_NEAR(obs.gamma1[n], latpimc::g1_estimator(w, n, params), 1e-12);
      EXPECT_NEAR(obs.gamma1[n], ev.g1(w, n), 1e-12);
      EXPECT_DOUBLE_EQ(obs.gamma2[n], latpimc::g2_estimator(w, n, cfg));
      EXPECT_DOUBLE_EQ(obs.gamma2[n], ev.g2(w, n));
    }
  }
}

TEST(Estimators, LargeStepsGrowTheTable) {
  const auto params = latpimc::make_params(1.0, 4);
  const auto cfg = LatticeConfig::free(4);
  ObservableEvaluator ev(params, cfg, 2);
  const ClosedWalk w{{0, 40, 40, 0}};
  const auto obs = ev.evaluate(w);
  EXPECT_TRUE(std::isfinite(obs.tau));
  EXPECT_NEAR(obs.tau, latpimc::kinetic_estimator(w, params), 1e-10);
}

TEST(Estimators, UnbiasedOnFreeWalks) {
  const double beta = 1.0;
  const auto params = latpimc::make_params(beta, 16);
  const auto cfg = LatticeConfig::free(64);
  latpimc::WalkSampler sampler(params);
  ObservableEvaluator ev(params, cfg, 3);
  auto rng = latpimc::make_stream(33, 0);
  latpimc::BlockAccumulator acc(4, 1000);
  for (int i = 0; i < 200000; ++i) {
    const auto obs = ev.evaluate(sampler.sample_closed_walk(0, rng));
    acc.add(std::vector<double>{obs.tau, obs.tau2, obs.gamma1[1], obs.gamma1[2]});
  }
  const auto st = latpimc::aggregate(acc);
  namespace fp = latpimc::free_particle;
  EXPECT_NEAR(st.mean[0], fp::mean_energy(beta), 4 * st.std_error[0]);
  const auto fl = latpimc::jackknife_variance(acc, 0, 1);
  EXPECT_NEAR(fl.value, fp::energy_fluctuation(beta), 4 * fl.std_error);
  EXPECT_NEAR(st.mean[2], fp::g1_exact(1, beta), 4 * st.std_error[2]);
  EXPECT_NEAR(st.mean[3], fp::g1_exact(2, beta), 4 * st.std_error[3]);
}

TEST(Estimators, Validation) {
  const auto cfg = LatticeConfig::free(4);
  EXPECT_THROW(ObservableEvaluator(latpimc::make_params(1.0, 4), cfg, -1), latpimc::ConfigError);
}
