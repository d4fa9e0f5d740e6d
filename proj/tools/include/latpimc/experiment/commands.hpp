#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "latpimc/experiment/config.hpp"
#include "latpimc/statistics.hpp"

namespace latpimc::experiment {

/// Monte Carlo result for one beta.
struct PimcCell {
  double beta = 0.0;
  bool ok = false;
  std::string status = "ok";
  double e_mean = 0.0, e_err = 0.0;
  double e_fluct = 0.0, e_fluct_err = 0.0;
  double v_mean = 0.0, v_err = 0.0;
  std::vector<double> g1, g1_err;
  std::vector<double> g2, g2_err;
  double acceptance = 0.0;
  long proposals = 0;
  bool direct = false;
  std::size_t n_blocks = 0;
  double wall_seconds = 0.0;  // log only; never written to CSV
};

/// Runs every beta of the grid, fanning cells out to config.threads workers.
/// Results come back in grid order and do not depend on the thread count.
std::vector<PimcCell> run_pimc(const ExperimentConfig& config);

struct ComparisonRow {
  std::string observable;
  double beta = 0.0;
  double analytic = 0.0;
  double mc_mean = 0.0;
  double mc_err = 0.0;
  std::string policy;   // human-readable tolerance rule
  bool checked = true;  // false: reported for information only
  bool pass = true;

  double abs_dev() const { return mc_mean - analytic; }
  double rel_dev() const { return analytic != 0.0 ? (mc_mean - analytic) / std::abs(analytic) : 0.0; }
};

std::vector<ComparisonRow> compare_cells(const ExperimentConfig& config, const std::vector<PimcCell>& cells);

// CSV writers. Column order is fixed and documented in the README.
void write_exact_free(const ExperimentConfig& config, std::ostream& csv);
void write_exact_striped(const ExperimentConfig& config, std::ostream& csv);
void write_pimc(const ExperimentConfig& config, const std::vector<PimcCell>& cells, std::ostream& csv);
void write_comparison(const std::vector<ComparisonRow>& rows, std::ostream& csv);

/// Run-log lines (seed, schedule, acceptance and wall time per cell).
void write_run_log(const ExperimentConfig& config, const std::vector<PimcCell>& cells, std::ostream& log);

/// Runs the configured mode end to end, writing CSV to config.out (or `fallback`)
/// and a run log next to it. Returns the process exit status.
int run_experiment(const ExperimentConfig& config, std::ostream& fallback, std::ostream& diagnostics);

/// Number formatting shared by all CSV output (round-trippable, locale-free).
std::string format_number(double x);

}  // namespace latpimc::experiment
