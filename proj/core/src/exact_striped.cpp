#include "latpimc/exact_striped.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <string>

#include "latpimc/errors.hpp"

namespace latpimc::striped {
namespace {

void check_beta(double beta) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw DomainError("beta must be finite and >= 0, got " + std::to_string(beta));
  }
}

void check_epsilon(double epsilon) {
  if (!std::isfinite(epsilon) || epsilon < 0.0) {
    throw DomainError("epsilon must be finite and >= 0, got " + std::to_string(epsilon));
  }
}

double radical(double x, double gap) {
  const double c = std::cos(x);
  return std::sqrt(gap * gap + 16.0 * c * c);
}

// Gibbs weights of both bands at one wavenumber, shifted by the largest
// exponent so that beta up to a few hundred stays finite:
//   upper = e^{-beta (F + Fmax)/2},  lower = e^{beta (F - Fmax)/2}.
struct BandPoint {
  double c = 0.0;
  double F = 0.0;
  double upper = 0.0;
  double lower = 0.0;
};

BandPoint band_point(double u, double beta, double gap, double F_max) {
  BandPoint p;
  p.c = std::cos(u);
  p.F = std::sqrt(gap * gap + 16.0 * p.c * p.c);
  p.upper = std::exp(-0.5 * beta * (p.F + F_max));
  p.lower = std::exp(0.5 * beta * (p.F - F_max));
  return p;
}

// Occupied-sublattice weight of the lower band, 8c^2 / (F (F + eps)), written
// without the cancellation in (1 - eps/F)/2.
double lower_occupied_weight(double c, double F, double epsilon) {
  if (F == 0.0) return 0.5;
  return 8.0 * c * c / (F * (F + epsilon));
}

// Density-matrix integrands for separation n: occupied-occupied, empty-empty and
// mixed-parity numerators followed by the common normaliser.
std::array<double, 4> density_integrals(int n, double beta, double epsilon, const QuadratureSpec& quad) {
  const double F_max = std::sqrt(epsilon * epsilon + 16.0);
  auto res = integrate_periodic<4>(
      [&](double u) {
        const BandPoint b = band_point(u, beta, epsilon, F_max);
        const double m = lower_occupied_weight(b.c, b.F, epsilon);
        const double oo = (1.0 - m) * b.upper + m * b.lower;
        const double ee = m * b.upper + (1.0 - m) * b.lower;
        const double mixed = b.F == 0.0 ? 0.0 : 2.0 * b.c / b.F * (b.lower - b.upper);
        const double phase = std::cos(u * n);
        return std::array<double, 4>{oo * phase, ee * phase, mixed * phase, b.upper + b.lower};
      },
      quad);
  return res.value;
}

}  // namespace

double band_energy(double x, Branch branch, double a, double b) {
  const double half = 0.5 * radical(x, a - b);
  return 0.5 * (a + b) + (branch == Branch::Upper ? half : -half);
}

double ground_state_energy(double a, double b) {
  return 0.5 * (a + b) - 0.5 * std::sqrt((a - b) * (a - b) + 16.0);
}

double ground_state_potential(double epsilon) {
  check_epsilon(epsilon);
  const double F = std::sqrt(epsilon * epsilon + 16.0);
  return epsilon * lower_occupied_weight(1.0, F, epsilon);
}

double log_partition_per_site(double beta, double a, double b, const QuadratureSpec& quad) {
  check_beta(beta);
  const double gap = a - b;
  const double F_max = std::sqrt(gap * gap + 16.0);
  auto res = integrate_periodic<1>(
      [&](double u) {
        const BandPoint p = band_point(u, beta, gap, F_max);
        return std::array<double, 1>{0.5 * (p.upper + p.lower)};
      },
      quad);
  return -0.5 * beta * (a + b) + 0.5 * beta * F_max + std::log(res.value[0] / std::numbers::pi);
}

double partition_per_site(double beta, double a, double b, const QuadratureSpec& quad) {
  return std::exp(log_partition_per_site(beta, a, b, quad));
}

double mean_energy(double beta, double a, double b, const QuadratureSpec& quad) {
  check_beta(beta);
  const double gap = a - b;
  const double F_max = std::sqrt(gap * gap + 16.0);
  auto res = integrate_periodic<2>(
      [&](double u) {
        const BandPoint p = band_point(u, beta, gap, F_max);
        return std::array<double, 2>{p.F * (p.lower - p.upper), p.upper + p.lower};
      },
      quad);
  return 0.5 * (a + b) - 0.5 * res.value[0] / res.value[1];
}

double mean_potential(double beta, double epsilon, const QuadratureSpec& quad) {
  check_beta(beta);
  check_epsilon(epsilon);
  if (epsilon == 0.0) return 0.0;
  const double F_max = std::sqrt(epsilon * epsilon + 16.0);
  auto res = integrate_periodic<2>(
      [&](double u) {
        const BandPoint p = band_point(u, beta, epsilon, F_max);
        const double m = lower_occupied_weight(p.c, p.F, epsilon);
        return std::array<double, 2>{(1.0 - m) * p.upper + m * p.lower, p.upper + p.lower};
      },
      quad);
  return epsilon * res.value[0] / res.value[1];
}

BlochAmplitudes bloch_amplitudes(double x, double epsilon) {
  check_epsilon(epsilon);
  BlochAmplitudes amp;
  const double c = std::cos(x);
  const double F = std::sqrt(epsilon * epsilon + 16.0 * c * c);
  if (F == 0.0) return amp;  // epsilon = 0 at cos x = 0: symmetric split by continuity
  const double m = lower_occupied_weight(c, F, epsilon);
  amp.u1_minus_sq = m;
  amp.u2_minus_sq = 1.0 - m;
  amp.u1_plus_sq = 1.0 - m;
  amp.u2_plus_sq = m;
  amp.cross_plus = -2.0 * c / F;
  amp.cross_minus = 2.0 * c / F;
  return amp;
}

double density_matrix_element(long j, long jp, double beta, double epsilon, const QuadratureSpec& quad) {
  check_beta(beta);
  check_epsilon(epsilon);
  const long n = j - jp;
  if (std::labs(n) > (1L << 20)) throw RangeError("density-matrix separation too large");
  const auto v = density_integrals(static_cast<int>(n), beta, epsilon, quad);
  const bool j_odd = (j % 2) != 0;
  const bool jp_odd = (jp % 2) != 0;
  double numerator = v[2];
  if (j_odd && jp_odd) numerator = v[0];
  if (!j_odd && !jp_odd) numerator = v[1];
  return 2.0 * numerator / v[3];
}

std::vector<double> qp_correlation(int n_max, double beta, double epsilon, const QuadratureSpec& quad) {
  check_beta(beta);
  check_epsilon(epsilon);
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  std::vector<double> g(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const auto v = density_integrals(n, beta, epsilon, quad);
    // Even separations pair like sublattices (d_{0,n} and d_{1,1+n}); odd ones are mixed.
    g[n] = n % 2 == 0 ? (v[0] + v[1]) / v[3] : 2.0 * v[2] / v[3];
  }
  return g;
}

std::vector<double> atom_qp_correlation(int n_max, double beta, double epsilon, const QuadratureSpec& quad) {
  check_beta(beta);
  check_epsilon(epsilon);
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  const auto v = density_integrals(0, beta, epsilon, quad);
  const double on_occupied = v[0] / v[3];
  const double on_empty = v[1] / v[3];
  std::vector<double> g(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) g[n] = n % 2 == 0 ? on_occupied : on_empty;
  return g;
}

}  // namespace latpimc::striped
