#pragma once

#include <vector>

namespace latpimc::free_particle {

// Canonical observables of a free particle on an infinite tight-binding chain.
// Every function takes the inverse temperature beta >= 0 and hopping t > 0.

/// Band energy 2t - 2t cos(2 pi alpha / L) for 1 <= alpha <= L.
double spectrum_at(int alpha, int L, double t = 1.0);

/// Z/L = e^{-2 beta t} I_0(2 beta t).
double partition_per_site(double beta, double t = 1.0);

/// <H> = 2t - 2t I_1/I_0.
double mean_energy(double beta, double t = 1.0);

/// <H^2> - <H>^2 = 2t^2 + 2t^2 I_2/I_0 - 4t^2 (I_1/I_0)^2.
double energy_fluctuation(double beta, double t = 1.0);

/// G_1(n) = I_n(2 beta t) / I_0(2 beta t).
double g1_exact(int n, double beta, double t = 1.0);

struct FreeObservables {
  double z_per_site = 0.0;
  double mean_energy = 0.0;
  double energy_fluctuation = 0.0;
  std::vector<double> g1;  // index n = 0..n_max
};

FreeObservables observables(double beta, double t = 1.0, int n_max = 20);

}  // namespace latpimc::free_particle
