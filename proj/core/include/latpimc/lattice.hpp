#pragma once

#include <cstdint>
#include <vector>

namespace latpimc {

/// Inverse temperature, hopping energy and Trotter number of a run.
struct ThermoParams {
  double beta = 1.0;
  int p = 100;
  double t = 1.0;

  /// Throws ConfigError unless beta >= 0, t > 0 and p >= 2 (all finite).
  void validate() const;

  /// Argument of the per-step Bessel weight, 2 beta t / p.
  double z() const noexcept { return 2.0 * beta * t / p; }
};

ThermoParams make_params(double beta, int p, double t = 1.0);

/// Periodic 1D lattice with quenched site occupancy n_j in {0,1} and on-site
/// potential epsilon on occupied sites.
class LatticeConfig {
 public:
  static LatticeConfig striped(int L, double epsilon);
  static LatticeConfig free(int L);
  static LatticeConfig explicit_pattern(std::vector<std::uint8_t> occupancy, double epsilon);

  int size() const noexcept { return static_cast<int>(occupancy_.size()); }
  double epsilon() const noexcept { return epsilon_; }
  const std::vector<std::uint8_t>& occupancy() const noexcept { return occupancy_; }

  /// Non-negative remainder of j modulo L.
  int reduce(std::int64_t j) const noexcept {
    const std::int64_t L = size();
    std::int64_t r = j % L;
    return static_cast<int>(r < 0 ? r + L : r);
  }

  int occupancy_at(std::int64_t j) const noexcept { return occupancy_[reduce(j)]; }
  double potential_at(std::int64_t j) const noexcept { return epsilon_ * occupancy_[reduce(j)]; }

  /// True when every site carries zero potential.
  bool is_free() const noexcept;
  double max_potential() const noexcept;

 private:
  LatticeConfig(std::vector<std::uint8_t> occupancy, double epsilon);

  std::vector<std::uint8_t> occupancy_;
  double epsilon_ = 0.0;
};

}  // namespace latpimc
