#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latpimc/lattice.hpp"
#include "latpimc/metropolis.hpp"

namespace latpimc::experiment {

enum class Mode { ExactFree, ExactStriped, Pimc, Compare };

Mode parse_mode(const std::string& text);
std::string mode_name(Mode mode);

struct LatticeSpec {
  int L = 100;
  double epsilon = 10.0;
  std::string pattern = "striped";         // free | striped | explicit
  std::vector<std::uint8_t> occupancy;     // used when pattern == explicit

  LatticeConfig build() const;
  bool is_free() const { return pattern == "free" || epsilon == 0.0; }
};

/// Everything that determines a run. Identical configs (including the seed)
/// produce byte-identical CSV output.
struct ExperimentConfig {
  Mode mode = Mode::Pimc;
  LatticeSpec lattice;
  std::vector<double> betas;  // empty: mode-dependent default grid
  double t = 1.0;
  int p = 100;
  Schedule schedule;
  long block_size = 0;  // 0: max(50, walks/100)
  int chains = 1;       // independent chains per beta; walks are split evenly
  std::uint64_t seed = 20240601;
  std::string out;      // empty: stdout
  int n_max = 10;
  double quad_tol = 1e-10;
  int threads = 0;      // 0: hardware concurrency

  void validate() const;
  std::vector<double> beta_grid() const;
  long effective_block_size() const;
};

/// Applies one setting. Keys may be dotted (lattice.L) or flat (lattice_size).
/// Throws ConfigError for unknown keys or malformed values.
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);

/// Parses either a JSON object or flat `key = value` lines (# starts a comment).
/// JSON objects are flattened to the same settings, so both forms agree.
std::vector<std::pair<std::string, std::string>> parse_settings(const std::string& text);

ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base = {});

/// Default beta grids used when none is given.
std::vector<double> default_free_betas();
std::vector<double> default_striped_betas();
std::vector<double> default_striped_exact_betas();

}  // namespace latpimc::experiment
