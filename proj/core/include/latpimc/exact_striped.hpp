#pragma once

#include <vector>

#include "latpimc/quadrature.hpp"

namespace latpimc::striped {

// Two-band solution for a chain whose sites alternate between on-site energy a
// (occupied sublattice, odd sites) and b (empty sublattice, even sites), with
// hopping t = 1. The physical striped lattice uses a = 2 + epsilon and b = 2.
// Thermal observables are continuum (N -> infinity) integrals over the reduced
// wavenumber u in [0, 2 pi).

enum class Branch { Lower, Upper };

/// E_{+/-}(x) = (a+b)/2 +/- sqrt((a-b)^2 + 16 cos^2 x)/2.
double band_energy(double x, Branch branch, double a, double b);

/// Minimum of the lower band, reached at cos^2 x = 1.
double ground_state_energy(double a, double b);

/// epsilon times the occupied-sublattice weight of the ground state (a = 2 + epsilon, b = 2).
double ground_state_potential(double epsilon);

/// Natural log of Z/N = e^{-beta (a+b)/2} (1/pi) integral cosh(beta F/2) du.
double log_partition_per_site(double beta, double a, double b, const QuadratureSpec& quad = {});
double partition_per_site(double beta, double a, double b, const QuadratureSpec& quad = {});

double mean_energy(double beta, double a, double b, const QuadratureSpec& quad = {});
double mean_potential(double beta, double epsilon, const QuadratureSpec& quad = {});

struct BlochAmplitudes {
  double u1_plus_sq = 0.5;   // occupied sublattice, upper band
  double u1_minus_sq = 0.5;  // occupied sublattice, lower band
  double u2_plus_sq = 0.5;   // empty sublattice, upper band
  double u2_minus_sq = 0.5;
  double cross_plus = 0.0;   // u1* u2, upper band
  double cross_minus = 0.0;
};

/// Sublattice amplitudes of the Bloch states at wavenumber x. At cos x = 0 the
/// one-sided limit is returned; at epsilon = 0 the split is symmetric.
BlochAmplitudes bloch_amplitudes(double x, double epsilon);

/// L * rho_{j j'}: the thermal one-body density matrix scaled by the lattice
/// length so that (d_00 + d_11)/2 = 1 and, at epsilon = 0, d_{0,n} = G_1(n).
double density_matrix_element(long j, long jp, double beta, double epsilon,
                              const QuadratureSpec& quad = {});

/// Parity average (d_{0,n} + d_{1,1+n})/2 for n = 0..n_max.
std::vector<double> qp_correlation(int n_max, double beta, double epsilon,
                                   const QuadratureSpec& quad = {});

/// Probability that the site n to the left of the particle is occupied, n = 0..n_max.
std::vector<double> atom_qp_correlation(int n_max, double beta, double epsilon,
                                        const QuadratureSpec& quad = {});

}  // namespace latpimc::striped
