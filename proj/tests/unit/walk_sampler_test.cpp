#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "enumeration.hpp"
#include "latpimc/errors.hpp"
#include "latpimc/rng.hpp"
#include "latpimc/walk_sampler.hpp"

using latpimc::ClosedWalk;
using latpimc::WalkSampler;

TEST(ClosedWalk, StepsWrapAround) {
  const ClosedWalk w{{3, 4, 2, 2}};
  EXPECT_EQ(w.steps(), (std::vector<std::int64_t>{1, -2, 0, 1}));
  const auto s = w.steps();
  EXPECT_EQ(std::accumulate(s.begin(), s.end(), std::int64_t{0}), 0);
}

TEST(WalkSampler, WalksCloseAndStartWhereAsked) {
  auto rng = latpimc::make_stream(10, 0);
  for (double beta : {0.01, 1.0, 20.0}) {
    const auto params = latpimc::make_params(beta, 40);
    WalkSampler sampler(params);
    for (int i = 0; i < 200; ++i) {
      const auto w = sampler.sample_closed_walk(-17, rng);
      ASSERT_EQ(w.size(), 40);
      EXPECT_EQ(w.positions[0], -17);
      const auto s = w.steps();
      EXPECT_EQ(std::accumulate(s.begin(), s.end(), std::int64_t{0}), 0);
    }
  }
}

TEST(WalkSampler, SmallWalkLawMatchesEnumeration) {
  const auto params = latpimc::make_params(1.0, 4);  // z = 0.5
  WalkSampler sampler(params, 2);
  const auto target = oracle::enumerate_steps(4, 0, 2, params.z());
  auto rng = latpimc::make_stream(11, 0);
  std::map<oracle::Key, long> counts;
  const long n = 1000000;
  for (long i = 0; i < n; ++i) ++counts[sampler.sample_closed_walk(0, rng).steps()];
  EXPECT_LT(oracle::total_variation(target, counts, n), 0.01);
}

TEST(WalkSampler, BridgeSegmentLawMatchesEnumeration) {
  const auto params = latpimc::make_params(1.5, 6);  // z = 0.5
  WalkSampler sampler(params, 2);
  // Segment of 3 steps from index 1 to index 4 with net displacement +2.
  const ClosedWalk base{{0, 1, 2, 3, 3, 1}};
  ASSERT_EQ(base.positions[4] - base.positions[1], 2);
  const auto target = oracle::enumerate_steps(3, 2, 2, params.z());
  auto rng = latpimc::make_stream(12, 0);
  std::map<oracle::Key, long> counts;
  const long n = 400000;
  for (long i = 0; i < n; ++i) {
    ClosedWalk w = base;
    sampler.resample_segment(w, 1, 3, rng);
    EXPECT_EQ(w.positions[0], 0);
    EXPECT_EQ(w.positions[4], 3);
    EXPECT_EQ(w.positions[5], 1);
    ++counts[{w.step(1), w.step(2), w.step(3)}];
  }
  EXPECT_LT(oracle::total_variation(target, counts, n), 0.01);
}

TEST(WalkSampler, UnitSegmentIsANoOp) {
  const auto params = latpimc::make_params(2.0, 8);
  WalkSampler sampler(params);
  auto rng = latpimc::make_stream(13, 0);
  const ClosedWalk w = sampler.sample_closed_walk(5, rng);
  for (int start = 0; start < 8; ++start) {
    ClosedWalk copy = w;
    sampler.resample_segment(copy, start, 1, rng);
    EXPECT_EQ(copy, w);
  }
}

TEST(WalkSampler, FullLengthSegmentKeepsAnchor) {
  const auto params = latpimc::make_params(3.0, 12);
  WalkSampler sampler(params);
  auto rng = latpimc::make_stream(14, 0);
  ClosedWalk w = sampler.sample_closed_walk(0, rng);
  bool changed = false;
  for (int i = 0; i < 50; ++i) {
    const ClosedWalk before = w;
    sampler.resample_segment(w, 7, 12, rng);
    EXPECT_EQ(w.positions[7], before.positions[7]);
    const auto s = w.steps();
    EXPECT_EQ(std::accumulate(s.begin(), s.end(), std::int64_t{0}), 0);
    changed = changed || !(w == before);
  }
  EXPECT_TRUE(changed);
}

TEST(WalkSampler, WrappingSegment) {
  const auto params = latpimc::make_params(2.0, 10);
  WalkSampler sampler(params);
  auto rng = latpimc::make_stream(15, 0);
  ClosedWalk w = sampler.sample_closed_walk(3, rng);
  const ClosedWalk before = w;
  sampler.resample_segment(w, 8, 5, rng);  // touches positions 9, 0, 1, 2
  for (int a = 3; a <= 8; ++a) EXPECT_EQ(w.positions[a], before.positions[a]);
}

TEST(WalkSampler, FreeFunctionsAndErrors) {
  const auto params = latpimc::make_params(1.0, 6);
  auto rng = latpimc::make_stream(16, 0);
  const auto w = latpimc::sample_closed_walk(params, 2, rng);
  EXPECT_EQ(w.positions[0], 2);
  const auto r = latpimc::resample_segment(w, 0, 3, params, rng);
  EXPECT_EQ(r.positions[3], w.positions[3]);
  WalkSampler sampler(params);
  ClosedWalk copy = w;
  EXPECT_THROW(sampler.resample_segment(copy, 0, 0, rng), latpimc::RangeError);
  EXPECT_THROW(sampler.resample_segment(copy, 0, 7, rng), latpimc::RangeError);
  EXPECT_THROW(sampler.resample_segment(copy, 6, 2, rng), latpimc::RangeError);
  ClosedWalk wrong{{0, 0, 0}};
  EXPECT_THROW(sampler.resample_segment(wrong, 0, 2, rng), latpimc::RangeError);
}
