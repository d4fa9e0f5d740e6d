#include "latpimc/experiment/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>

#include "latpimc/errors.hpp"
#include "latpimc/estimators.hpp"
#include "latpimc/exact_free.hpp"
#include "latpimc/exact_striped.hpp"
#include "latpimc/metropolis.hpp"
#include "latpimc/rng.hpp"

namespace latpimc::experiment {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Analytic references used for pass/fail decisions are never looser than this.
constexpr double kCompareQuadTol = 1e-8;

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void require_unit_hopping(const ExperimentConfig& config) {
  if (config.t != 1.0) {
    throw ConfigError("striped analytic results are available only for t = 1");
  }
}

struct ChainResult {
  BlockAccumulator acc{1, 1};
  ChainReport report;
  double seconds = 0.0;
};

std::size_t columns(int n_max) { return 4 + 2 * static_cast<std::size_t>(n_max + 1); }

ChainResult run_one_chain(const ExperimentConfig& config, const LatticeConfig& lattice, double beta,
                          std::size_t cell, int chain, long n_samples) {
  const auto t0 = std::chrono::steady_clock::now();
  const ThermoParams params = make_params(beta, config.p, config.t);
  Schedule schedule = config.schedule;
  schedule.n_samples = n_samples;
  ObservableEvaluator eval(params, lattice, config.n_max);
  ChainResult out;
  out.acc = BlockAccumulator(columns(config.n_max), config.effective_block_size());
  std::vector<double> row(columns(config.n_max));
  ObservableSample sample;
  Rng rng = make_stream(config.seed, (static_cast<std::uint64_t>(cell) << 20) | static_cast<std::uint64_t>(chain));
  out.report = run_chain(lattice, params, schedule, rng, [&](const ClosedWalk& walk) {
    eval.evaluate(walk, sample);
    row[0] = sample.tau;
    row[1] = sample.tau2;
    row[2] = sample.v;
    row[3] = sample.tau + sample.v;
    std::copy(sample.gamma1.begin(), sample.gamma1.end(), row.begin() + 4);
    std::copy(sample.gamma2.begin(), sample.gamma2.end(), row.begin() + 4 + sample.gamma1.size());
    out.acc.add(row);
  });
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

PimcCell assemble(const ExperimentConfig& config, double beta, std::vector<ChainResult>& chains) {
  PimcCell cell;
  cell.beta = beta;
  BlockAccumulator acc = chains.front().acc;
  for (std::size_t c = 1; c < chains.size(); ++c) acc.merge(chains[c].acc);
  long accepted = 0;
  for (const auto& c : chains) {
    cell.proposals += c.report.proposals;
    accepted += c.report.accepted;
    cell.direct = c.report.direct;
    cell.wall_seconds += c.seconds;
  }
  cell.acceptance = cell.proposals == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(cell.proposals);
  const std::size_t nn = static_cast<std::size_t>(config.n_max) + 1;
  try {
    const RunStats stats = aggregate(acc);
    const JackknifeEstimate fluct = jackknife_variance(acc, 0, 1);
    cell.n_blocks = stats.n_blocks;
    cell.e_mean = stats.mean[3];
    cell.e_err = stats.std_error[3];
    cell.e_fluct = fluct.value;
    cell.e_fluct_err = fluct.std_error;
    cell.v_mean = stats.mean[2];
    cell.v_err = stats.std_error[2];
    for (std::size_t n = 0; n < nn; ++n) {
      cell.g1.push_back(stats.mean[4 + n]);
      cell.g1_err.push_back(stats.std_error[4 + n]);
      cell.g2.push_back(stats.mean[4 + nn + n]);
      cell.g2_err.push_back(stats.std_error[4 + nn + n]);
    }
    cell.ok = true;
  } catch (const StatisticsError& e) {
    cell.ok = false;
    cell.status = std::string("statistics_error: ") + e.what();
    cell.e_mean = cell.e_err = cell.e_fluct = cell.e_fluct_err = cell.v_mean = cell.v_err = kNaN;
    cell.g1.assign(nn, kNaN);
    cell.g1_err.assign(nn, kNaN);
    cell.g2.assign(nn, kNaN);
    cell.g2_err.assign(nn, kNaN);
  }
  return cell;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<PimcCell> run_pimc(const ExperimentConfig& config) {
  config.validate();
  const LatticeConfig lattice = config.lattice.build();
  const std::vector<double> betas = config.beta_grid();
  const int chains = config.chains;
  const std::size_t tasks = betas.size() * static_cast<std::size_t>(chains);
  std::vector<ChainResult> results(tasks);
  parallel_for(tasks, config.threads, [&](std::size_t task) {
    const std::size_t cell = task / static_cast<std::size_t>(chains);
    const int chain = static_cast<int>(task % static_cast<std::size_t>(chains));
    long count = config.schedule.n_samples / chains;
    if (chain == chains - 1) count += config.schedule.n_samples % chains;
    results[task] = run_one_chain(config, lattice, betas[cell], cell, chain, count);
  });
  std::vector<PimcCell> cells;
  for (std::size_t c = 0; c < betas.size(); ++c) {
    std::vector<ChainResult> group(std::make_move_iterator(results.begin() + static_cast<long>(c) * chains),
                                   std::make_move_iterator(results.begin() + static_cast<long>(c + 1) * chains));
    cells.push_back(assemble(config, betas[c], group));
  }
  return cells;
}

std::vector<ComparisonRow> compare_cells(const ExperimentConfig& config, const std::vector<PimcCell>& cells) {
  const LatticeSpec& lat = config.lattice;
  if (lat.pattern == "explicit" && !lat.is_free()) {
    throw ConfigError("compare needs a free or striped lattice (no analytic reference for explicit patterns)");
  }
  QuadratureSpec quad;
  quad.rel_tol = std::min(config.quad_tol, kCompareQuadTol);
  std::vector<ComparisonRow> rows;
  auto add = [&](std::string name, double beta, double analytic, double mean, double err) -> ComparisonRow& {
    ComparisonRow r;
    r.observable = std::move(name);
    r.beta = beta;
    r.analytic = analytic;
    r.mc_mean = mean;
    r.mc_err = err;
    rows.push_back(r);
    return rows.back();
  };
  auto rel_policy = [](ComparisonRow& r, double tol) {
    std::ostringstream s;
    s << "|rel| < " << tol;
    r.policy = s.str();
    r.pass = std::abs(r.rel_dev()) < tol;
  };

  for (const PimcCell& cell : cells) {
    const double beta = cell.beta;
    if (lat.is_free()) {
      auto& e = add("E_mean", beta, free_particle::mean_energy(beta, config.t), cell.e_mean, cell.e_err);
      e.policy = "|abs| < 3 se and |abs| < 5e-3";
      e.pass = std::abs(e.abs_dev()) < 3.0 * e.mc_err && std::abs(e.abs_dev()) < 5e-3;
      auto& f = add("E_fluct", beta, free_particle::energy_fluctuation(beta, config.t), cell.e_fluct,
                    cell.e_fluct_err);
      f.policy = "|abs| < 3 se";
      f.pass = std::abs(f.abs_dev()) < 3.0 * f.mc_err;
      for (int n = 0; n <= config.n_max; ++n) {
        auto& g = add("G1_" + std::to_string(n), beta, free_particle::g1_exact(n, beta, config.t), cell.g1[n],
                      cell.g1_err[n]);
        // The estimator is dominated by rare large steps unless the walk is
        // spread out, so the 20% rule is only meaningful at low temperature.
        if (n <= 5 && beta >= 10.0) {
          rel_policy(g, 0.20);
        } else {
          g.policy = "info";
          g.checked = false;
        }
      }
      continue;
    }
    require_unit_hopping(config);
    const double eps = lat.epsilon;
    auto& v = add("V_mean", beta, striped::mean_potential(beta, eps, quad), cell.v_mean, cell.v_err);
    rel_policy(v, beta <= 1.0 ? 0.01 : 0.07);
    auto& e = add("E_mean", beta, striped::mean_energy(beta, 2.0 + eps, 2.0, quad), cell.e_mean, cell.e_err);
    if (beta <= 1.0) {
      rel_policy(e, 0.01);
    } else {
      e.policy = "info";
      e.checked = false;
    }
    const auto g2 = striped::atom_qp_correlation(config.n_max, beta, eps, quad);
    const auto g1 = striped::qp_correlation(config.n_max, beta, eps, quad);
    for (int n = 0; n <= config.n_max; ++n) {
      auto& r = add("G2_" + std::to_string(n), beta, g2[n], cell.g2[n], cell.g2_err[n]);
      r.policy = "|abs| < 0.05";
      r.pass = std::abs(r.abs_dev()) < 0.05;
    }
    for (int n = 0; n <= config.n_max; ++n) {
      auto& r = add("G1_" + std::to_string(n), beta, g1[n], cell.g1[n], cell.g1_err[n]);
      r.policy = "info";
      r.checked = false;
    }
  }
  for (auto& r : rows) {
    if (r.checked && !std::isfinite(r.mc_mean)) r.pass = false;
  }
  return rows;
}

void write_exact_free(const ExperimentConfig& config, std::ostream& csv) {
  csv << "beta,Z_per_site,E_mean,E_fluct";
  for (int n = 0; n <= config.n_max; ++n) csv << ",G1_" << n;
  csv << "\n";
  for (double beta : config.beta_grid()) {
    const auto obs = free_particle::observables(beta, config.t, config.n_max);
    csv << format_number(beta) << ',' << format_number(obs.z_per_site) << ',' << format_number(obs.mean_energy)
        << ',' << format_number(obs.energy_fluctuation);
    for (double g : obs.g1) csv << ',' << format_number(g);
    csv << "\n";
  }
}

void write_exact_striped(const ExperimentConfig& config, std::ostream& csv) {
  require_unit_hopping(config);
  const double eps = config.lattice.epsilon;
  QuadratureSpec quad;
  quad.rel_tol = config.quad_tol;
  csv << "beta,epsilon,log_Z_per_site,E_mean,V_mean,E_ground,V_ground";
  for (int n = 0; n <= config.n_max; ++n) csv << ",G1_" << n;
  for (int n = 0; n <= config.n_max; ++n) csv << ",G2_" << n;
  csv << ",status\n";
  const double e_ground = striped::ground_state_energy(2.0 + eps, 2.0);
  const double v_ground = striped::ground_state_potential(eps);
  const std::size_t nn = static_cast<std::size_t>(config.n_max) + 1;
  for (double beta : config.beta_grid()) {
    std::string status = "ok";
    auto guarded = [&](auto&& fn) {
      try {
        return fn();
      } catch (const NumericError& e) {
        std::ostringstream s;
        s << "quadrature_failed(achieved=" << e.achieved_tolerance() << ")";
        status = s.str();
        using R = decltype(fn());
        if constexpr (std::is_same_v<R, double>) {
          return kNaN;
        } else {
          return R(nn, kNaN);
        }
      }
    };
    const double log_z = guarded([&] { return striped::log_partition_per_site(beta, 2.0 + eps, 2.0, quad); });
    const double e_mean = guarded([&] { return striped::mean_energy(beta, 2.0 + eps, 2.0, quad); });
    const double v_mean = guarded([&] { return striped::mean_potential(beta, eps, quad); });
    const auto g1 = guarded([&] { return striped::qp_correlation(config.n_max, beta, eps, quad); });
    const auto g2 = guarded([&] { return striped::atom_qp_correlation(config.n_max, beta, eps, quad); });
    csv << format_number(beta) << ',' << format_number(eps) << ',' << format_number(log_z) << ','
        << format_number(e_mean) << ',' << format_number(v_mean) << ',' << format_number(e_ground) << ','
        << format_number(v_ground);
    for (double g : g1) csv << ',' << format_number(g);
    for (double g : g2) csv << ',' << format_number(g);
    csv << ',' << csv_field(status) << "\n";
  }
}

void write_pimc(const ExperimentConfig& config, const std::vector<PimcCell>& cells, std::ostream& csv) {
  csv << "beta,p,walks,E_mean,E_err,E_fluct,E_fluct_err,V_mean,V_err";
  for (int n = 0; n <= config.n_max; ++n) csv << ",G1_" << n << ",G1_" << n << "_err";
  for (int n = 0; n <= config.n_max; ++n) csv << ",G2_" << n << ",G2_" << n << "_err";
  csv << ",acceptance,status\n";
  for (const auto& c : cells) {
    csv << format_number(c.beta) << ',' << config.p << ',' << config.schedule.n_samples << ','
        << format_number(c.e_mean) << ',' << format_number(c.e_err) << ',' << format_number(c.e_fluct) << ','
        << format_number(c.e_fluct_err) << ',' << format_number(c.v_mean) << ',' << format_number(c.v_err);
    for (std::size_t n = 0; n < c.g1.size(); ++n) {
      csv << ',' << format_number(c.g1[n]) << ',' << format_number(c.g1_err[n]);
    }
    for (std::size_t n = 0; n < c.g2.size(); ++n) {
      csv << ',' << format_number(c.g2[n]) << ',' << format_number(c.g2_err[n]);
    }
    csv << ',' << format_number(c.acceptance) << ',' << csv_field(c.status) << "\n";
  }
}

void write_comparison(const std::vector<ComparisonRow>& rows, std::ostream& csv) {
  csv << "observable,beta,analytic,mc_mean,mc_err,abs_dev,rel_dev,policy,checked,pass\n";
  for (const auto& r : rows) {
    csv << r.observable << ',' << format_number(r.beta) << ',' << format_number(r.analytic) << ','
        << format_number(r.mc_mean) << ',' << format_number(r.mc_err) << ',' << format_number(r.abs_dev()) << ','
        << format_number(r.rel_dev()) << ',' << csv_field(r.policy) << ',' << (r.checked ? "yes" : "no") << ','
        << (r.pass ? "pass" : "FAIL") << "\n";
  }
}

void write_run_log(const ExperimentConfig& config, const std::vector<PimcCell>& cells, std::ostream& log) {
  const auto& s = config.schedule;
  log << "mode=" << mode_name(config.mode) << " seed=" << config.seed << " p=" << config.p << " t="
      << format_number(config.t) << "\n";
  log << "lattice pattern=" << config.lattice.pattern << " L=" << config.lattice.L
      << " epsilon=" << format_number(config.lattice.epsilon) << "\n";
  log << "schedule walks=" << s.n_samples << " burn_in=" << s.effective_burn_in(config.p) << " thin=" << s.thin
      << " segment_fraction=" << format_number(s.segment_fraction)
      << " translation_probability=" << format_number(s.translation_probability) << " chains=" << config.chains
      << " block_size=" << config.effective_block_size() << "\n";
  for (const auto& c : cells) {
    log << "beta=" << format_number(c.beta) << " sampler=" << (c.direct ? "direct" : "metropolis")
        << " proposals=" << c.proposals << " acceptance=" << format_number(c.acceptance)
        << " blocks=" << c.n_blocks << " wall_s=" << std::fixed << std::setprecision(3) << c.wall_seconds
        << std::defaultfloat << " status=" << c.status << "\n";
  }
}

int run_experiment(const ExperimentConfig& config, std::ostream& fallback, std::ostream& diagnostics) {
  config.validate();
  std::ofstream file;
  std::ostream* csv = &fallback;
  if (!config.out.empty()) {
    file.open(config.out, std::ios::binary | std::ios::trunc);
    if (!file) throw ConfigError("cannot write output file '" + config.out + "'");
    csv = &file;
  }
  auto with_log = [&](const std::function<void(std::ostream&)>& fn) {
    if (config.out.empty()) {
      fn(diagnostics);
      return;
    }
    std::ofstream log(config.out + ".log", std::ios::trunc);
    if (!log) throw ConfigError("cannot write run log '" + config.out + ".log'");
    fn(log);
  };

  int status = 0;
  switch (config.mode) {
    case Mode::ExactFree:
      write_exact_free(config, *csv);
      break;
    case Mode::ExactStriped:
      write_exact_striped(config, *csv);
      break;
    case Mode::Pimc: {
      const auto cells = run_pimc(config);
      write_pimc(config, cells, *csv);
      with_log([&](std::ostream& log) { write_run_log(config, cells, log); });
      break;
    }
    case Mode::Compare: {
      if (!config.lattice.is_free()) require_unit_hopping(config);
      const auto cells = run_pimc(config);
      const auto rows = compare_cells(config, cells);
      write_comparison(rows, *csv);
      long failed = 0;
      for (const auto& r : rows) failed += r.checked && !r.pass;
      with_log([&](std::ostream& log) {
        write_run_log(config, cells, log);
        log << "comparison rows=" << rows.size() << " failed=" << failed << "\n";
      });
      status = failed == 0 ? 0 : 1;
      break;
    }
  }
  csv->flush();
  if (!*csv) throw ConfigError("failed while writing output");
  return status;
}

}  // namespace latpimc::experiment
