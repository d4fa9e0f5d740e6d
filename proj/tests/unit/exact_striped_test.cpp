#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "exact_diag.hpp"
#include "latpimc/errors.hpp"
#include "latpimc/exact_free.hpp"
#include "latpimc/exact_striped.hpp"

namespace st = latpimc::striped;
using st::Branch;

TEST(StripedBands, Examples) {
  EXPECT_NEAR(st::band_energy(std::numbers::pi, Branch::Lower, 12, 2), 7.0 - std::sqrt(116.0) / 2.0, 1e-14);
  EXPECT_NEAR(st::band_energy(std::numbers::pi / 2, Branch::Upper, 12, 2), 12.0, 1e-12);
  EXPECT_NEAR(st::band_energy(std::numbers::pi / 2, Branch::Lower, 12, 2), 2.0, 1e-12);
  for (double x : {0.0, 0.3, 1.2, 2.9}) {
    const double c = std::abs(std::cos(x));
    EXPECT_NEAR(st::band_energy(x, Branch::Upper, 2, 2), 2.0 + 2.0 * c, 1e-14);
    EXPECT_NEAR(st::band_energy(x, Branch::Lower, 2, 2), 2.0 - 2.0 * c, 1e-14);
  }
}

TEST(StripedBands, SumAndProductRules) {
  for (int i = 0; i < 1000; ++i) {
    const double x = 2.0 * std::numbers::pi * i / 1000.0;
    const double ep = st::band_energy(x, Branch::Upper, 12, 2);
    const double em = st::band_energy(x, Branch::Lower, 12, 2);
    EXPECT_LE(em, ep);
    EXPECT_NEAR(ep + em, 14.0, 1e-12);
    EXPECT_NEAR(ep * em, 24.0 - 4.0 * std::cos(x) * std::cos(x), 1e-12);
  }
}

TEST(StripedGroundState, Constants) {
  EXPECT_NEAR(st::ground_state_energy(12, 2), 1.61483519287, 1e-10);
  EXPECT_NEAR(st::ground_state_energy(2, 2), 0.0, 1e-15);
  EXPECT_NEAR(st::ground_state_potential(10.0), 0.357616545574, 1e-11);
  EXPECT_EQ(st::ground_state_potential(0.0), 0.0);
  double prev = 0.0;
  for (double eps = 0.5; eps < 1e4; eps *= 2) {
    const double e = st::ground_state_energy(2 + eps, 2);
    EXPECT_LT(e, 2.0);
    EXPECT_GT(e, prev);
    prev = e;
  }
}

TEST(StripedGroundState, MatchesLowestEigenpair) {
  const auto v = oracle::striped_potential(64, 10.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle::hamiltonian(v));
  EXPECT_NEAR(es.eigenvalues()(0), st::ground_state_energy(12, 2), 1e-10);
  double vg = 0.0;
  for (int j = 0; j < 64; ++j) vg += v[j] * es.eigenvectors()(j, 0) * es.eigenvectors()(j, 0);
  EXPECT_NEAR(vg, st::ground_state_potential(10.0), 1e-10);
}

TEST(StripedAmplitudes, NormalisationAndCrossTerms) {
  for (int i = 0; i < 200; ++i) {
    const double x = 0.0137 + 2.0 * std::numbers::pi * i / 200.0;
    const auto a = st::bloch_amplitudes(x, 10.0);
    EXPECT_NEAR(a.u1_plus_sq + a.u2_plus_sq, 1.0, 1e-12);
    EXPECT_NEAR(a.u1_minus_sq + a.u2_minus_sq, 1.0, 1e-12);
    EXPECT_NEAR(a.cross_plus * a.cross_plus, a.u1_plus_sq * a.u2_plus_sq, 1e-12);
    EXPECT_NEAR(a.cross_minus * a.cross_minus, a.u1_minus_sq * a.u2_minus_sq, 1e-12);
    for (double w : {a.u1_plus_sq, a.u1_minus_sq, a.u2_plus_sq, a.u2_minus_sq}) {
      EXPECT_GE(w, 0.0);
      EXPECT_LE(w, 1.0);
    }
    // Closed form 8c^2 / (16c^2 -+ eps F + eps^2).
    const double c = std::cos(x), F = std::sqrt(100.0 + 16.0 * c * c);
    EXPECT_NEAR(a.u1_plus_sq, 8 * c * c / (16 * c * c - 10 * F + 100), 1e-9);
    EXPECT_NEAR(a.u1_minus_sq, 8 * c * c / (16 * c * c + 10 * F + 100), 1e-12);
  }
}

TEST(StripedAmplitudes, GapEdgeLimit) {
  const auto at = st::bloch_amplitudes(std::numbers::pi / 2, 10.0);
  for (double dx : {1e-4, -1e-4}) {
    const auto near = st::bloch_amplitudes(std::numbers::pi / 2 + dx, 10.0);
    EXPECT_NEAR(near.u1_plus_sq, at.u1_plus_sq, 1e-6);
    EXPECT_NEAR(near.u1_minus_sq, at.u1_minus_sq, 1e-6);
  }
  EXPECT_NEAR(at.u1_plus_sq, 1.0, 1e-12);  // upper band sits on the occupied sublattice
  EXPECT_NEAR(at.u1_minus_sq, 0.0, 1e-12);
  EXPECT_NEAR(at.u2_minus_sq, 1.0, 1e-12);
}

TEST(StripedAmplitudes, ZeroPotentialIsSymmetric) {
  for (double x : {0.2, 1.0, std::numbers::pi / 2, 2.5}) {
    const auto a = st::bloch_amplitudes(x, 0.0);
    EXPECT_NEAR(a.u1_plus_sq, 0.5, 1e-15);
    EXPECT_NEAR(a.u1_minus_sq, 0.5, 1e-15);
  }
}

TEST(StripedThermal, InfiniteTemperature) {
  EXPECT_NEAR(st::partition_per_site(0.0, 12, 2), 2.0, 1e-12);
  EXPECT_NEAR(st::mean_energy(0.0, 12, 2), 7.0, 1e-12);
  EXPECT_NEAR(st::mean_potential(0.0, 10.0), 5.0, 5e-10);
  for (double b : {0.0, 0.3, 3.0}) EXPECT_EQ(st::mean_potential(b, 0.0), 0.0);
}

TEST(StripedThermal, FreeBandReduction) {
  for (double b : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    EXPECT_NEAR(st::mean_energy(b, 2, 2), latpimc::free_particle::mean_energy(b), 1e-9) << "beta=" << b;
    // Two bands over the reduced zone count every state twice.
    EXPECT_NEAR(st::partition_per_site(b, 2, 2) / latpimc::free_particle::partition_per_site(b), 2.0, 1e-9);
  }
  EXPECT_NEAR(st::partition_per_site(1.0, 2, 2), 0.617016645107, 1e-10);
}

TEST(StripedThermal, LowTemperatureApproachesGroundState) {
  EXPECT_NEAR(st::mean_energy(100.0, 12, 2), 1.61989907756, 1e-9);
  EXPECT_LT(st::mean_energy(100.0, 12, 2) - st::ground_state_energy(12, 2), 6e-3);
  EXPECT_NEAR(st::mean_potential(100.0, 10.0), 0.353238749559, 1e-9);
  EXPECT_TRUE(std::isfinite(st::log_partition_per_site(300.0, 12, 2)));
}

TEST(StripedThermal, PotentialBounded) {
  for (double eps : {0.5, 3.0, 10.0, 40.0}) {
    for (double b : {0.0, 0.05, 0.5, 2.0, 20.0}) {
      const double v = st::mean_potential(b, eps);
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, eps / 2.0 + 1e-12);
    }
  }
}

TEST(StripedThermal, MatchesExactDiagonalisation) {
  const int L = 256;
  const auto v = oracle::striped_potential(L, 10.0);
  const auto H = oracle::hamiltonian(v);
  for (double b : {0.1, 1.0, 10.0}) {
    EXPECT_NEAR(st::mean_potential(b, 10.0), oracle::thermal_potential(v, b), 1e-9) << "beta=" << b;
    EXPECT_NEAR(st::mean_energy(b, 12, 2), oracle::thermal_energy(v, b), 1e-9) << "beta=" << b;
    EXPECT_NEAR(st::partition_per_site(b, 12, 2), 2.0 * oracle::partition_per_site(H, b), 1e-9 * st::partition_per_site(b, 12, 2));
    const auto rho = oracle::thermal_density(H, b);
    for (long j : {0L, 1L}) {
      for (long n = 0; n <= 5; ++n) {
        EXPECT_NEAR(st::density_matrix_element(j, j + n, b, 10.0), L * rho(j, j + n), 1e-8)
            << "beta=" << b << " j=" << j << " n=" << n;
      }
    }
    const auto g1 = st::qp_correlation(6, b, 10.0);
    for (int n = 0; n <= 6; ++n) {
      EXPECT_NEAR(g1[n], 0.5 * L * (rho(0, n) + rho(1, 1 + n)), 1e-8);
    }
  }
}

TEST(StripedDensityMatrix, TraceAndParityStructure) {
  for (double b : {0.1, 1.0, 10.0}) {
    const double d00 = st::density_matrix_element(0, 0, b, 10.0);
    const double d11 = st::density_matrix_element(1, 1, b, 10.0);
    EXPECT_NEAR(0.5 * (d00 + d11), 1.0, 1e-10);
    EXPECT_NEAR(d11 / 2.0, st::mean_potential(b, 10.0) / 10.0, 1e-10);
    EXPECT_NEAR(st::density_matrix_element(3, 7, b, 10.0), st::density_matrix_element(1, 5, b, 10.0), 1e-12);
    EXPECT_NEAR(st::density_matrix_element(2, 5, b, 10.0), st::density_matrix_element(5, 2, b, 10.0), 1e-12);
  }
  EXPECT_GT(st::density_matrix_element(0, 0, 10.0, 10.0), 10.0 * st::density_matrix_element(1, 1, 10.0, 10.0));
}

TEST(StripedDensityMatrix, ZeroPotentialReducesToFree) {
  for (int n = 0; n <= 4; ++n) {
    const double g = latpimc::free_particle::g1_exact(n, 1.0);
    EXPECT_NEAR(st::density_matrix_element(0, n, 1.0, 0.0), g, 1e-10);
    EXPECT_NEAR(st::density_matrix_element(1, 1 + n, 1.0, 0.0), g, 1e-10);
    EXPECT_NEAR(st::qp_correlation(4, 1.0, 0.0)[n], g, 1e-10);
  }
}

TEST(StripedCorrelations, AtomQpParityValues) {
  const auto g2 = st::atom_qp_correlation(10, 10.0, 10.0);
  ASSERT_EQ(g2.size(), 11u);
  EXPECT_NEAR(g2[0], 0.0304208195161, 1e-10);
  for (int n = 0; n <= 10; ++n) {
    EXPECT_NEAR(g2[n], n % 2 == 0 ? g2[0] : 1.0 - g2[0], 1e-12);
  }
}

TEST(StripedErrors, Domain) {
  EXPECT_THROW(st::mean_potential(-1.0, 10.0), latpimc::DomainError);
  EXPECT_THROW(st::mean_potential(1.0, -10.0), latpimc::DomainError);
  EXPECT_THROW(st::qp_correlation(-1, 1.0, 10.0), latpimc::DomainError);
  EXPECT_THROW(st::mean_potential(50.0, 10.0, latpimc::QuadratureSpec{1e-14, 64, 128}), latpimc::NumericError);
}
