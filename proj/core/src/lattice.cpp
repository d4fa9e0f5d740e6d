#include "latpimc/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "latpimc/errors.hpp"

namespace latpimc {

void ThermoParams::validate() const {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw ConfigError("beta must be finite and >= 0, got " + std::to_string(beta));
  }
  if (!std::isfinite(t) || t <= 0.0) {
    throw ConfigError("hopping t must be finite and > 0, got " + std::to_string(t));
  }
  if (p < 2) {
    throw ConfigError("Trotter number p must be >= 2, got " + std::to_string(p));
  }
}

ThermoParams make_params(double beta, int p, double t) {
  ThermoParams params{beta, p, t};
  params.validate();
  return params;
}

LatticeConfig::LatticeConfig(std::vector<std::uint8_t> occupancy, double epsilon)
    : occupancy_(std::move(occupancy)), epsilon_(epsilon) {
  if (occupancy_.empty()) throw ConfigError("lattice must have at least one site");
  if (!std::isfinite(epsilon_) || epsilon_ < 0.0) {
    throw ConfigError("epsilon must be finite and >= 0, got " + std::to_string(epsilon_));
  }
  for (auto n : occupancy_) {
    if (n > 1) throw ConfigError("occupancy entries must be 0 or 1");
  }
}

LatticeConfig LatticeConfig::striped(int L, double epsilon) {
  if (L < 2 || L % 2 != 0) {
    throw ConfigError("striped lattice needs an even length >= 2, got " + std::to_string(L));
  }
  std::vector<std::uint8_t> occ(static_cast<std::size_t>(L));
  for (int j = 0; j < L; ++j) occ[j] = static_cast<std::uint8_t>(j % 2);
  return LatticeConfig(std::move(occ), epsilon);
}

LatticeConfig LatticeConfig::free(int L) {
  if (L < 1) throw ConfigError("lattice length must be >= 1, got " + std::to_string(L));
  return LatticeConfig(std::vector<std::uint8_t>(static_cast<std::size_t>(L), 0), 0.0);
}

LatticeConfig LatticeConfig::explicit_pattern(std::vector<std::uint8_t> occupancy, double epsilon) {
  return LatticeConfig(std::move(occupancy), epsilon);
}

bool LatticeConfig::is_free() const noexcept { return max_potential() == 0.0; }

double LatticeConfig::max_potential() const noexcept {
  const bool any = std::any_of(occupancy_.begin(), occupancy_.end(), [](auto n) { return n != 0; });
  return any ? epsilon_ : 0.0;
}

}  // namespace latpimc
