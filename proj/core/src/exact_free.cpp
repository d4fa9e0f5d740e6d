#include "latpimc/exact_free.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "latpimc/bessel.hpp"
#include "latpimc/errors.hpp"

namespace latpimc::free_particle {
namespace {

void check(double beta, double t) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw DomainError("beta must be finite and >= 0, got " + std::to_string(beta));
  }
  if (!std::isfinite(t) || t <= 0.0) {
    throw DomainError("hopping t must be finite and > 0, got " + std::to_string(t));
  }
}

BesselTable table_for(double beta, double t, int order) {
  check(beta, t);
  return build_table(2.0 * beta * t, std::max(order, 2));
}

}  // namespace

double spectrum_at(int alpha, int L, double t) {
  if (L < 1 || alpha < 1 || alpha > L) {
    throw RangeError("spectrum index " + std::to_string(alpha) + " outside 1.." + std::to_string(L));
  }
  return 2.0 * t - 2.0 * t * std::cos(2.0 * std::numbers::pi * alpha / L);
}

double partition_per_site(double beta, double t) {
  return table_for(beta, t, 2).scaled(0);
}

double mean_energy(double beta, double t) {
  const BesselTable tab = table_for(beta, t, 2);
  return 2.0 * t - 2.0 * t * ratio(1, 0, tab);
}

double energy_fluctuation(double beta, double t) {
  const BesselTable tab = table_for(beta, t, 2);
  const double r1 = ratio(1, 0, tab);
  const double r2 = ratio(2, 0, tab);
  return 2.0 * t * t + 2.0 * t * t * r2 - 4.0 * t * t * r1 * r1;
}

double g1_exact(int n, double beta, double t) {
  const BesselTable tab = table_for(beta, t, std::abs(n));
  return ratio(n, 0, tab);
}

FreeObservables observables(double beta, double t, int n_max) {
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  const BesselTable tab = table_for(beta, t, n_max);
  FreeObservables out;
  out.z_per_site = tab.scaled(0);
  const double r1 = ratio(1, 0, tab);
  out.mean_energy = 2.0 * t - 2.0 * t * r1;
  out.energy_fluctuation = 2.0 * t * t + 2.0 * t * t * ratio(2, 0, tab) - 4.0 * t * t * r1 * r1;
  out.g1.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.g1[n] = ratio(n, 0, tab);
  return out;
}

}  // namespace latpimc::free_particle
