#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latpimc/errors.hpp"
#include "latpimc/experiment/commands.hpp"
#include "latpimc/experiment/config.hpp"

namespace {

using latpimc::experiment::ExperimentConfig;
using latpimc::experiment::Mode;

struct FlagSet {
  std::string config_path;
  std::map<std::string, std::string> values;  // setting key -> raw text
  std::vector<std::string> betas;
  std::vector<std::pair<std::string, CLI::Option*>> options;
  CLI::Option* beta_opt = nullptr;
};

void add_flags(CLI::App* app, FlagSet& flags, bool sampling) {
  app->add_option("--config", flags.config_path, "key=value or JSON configuration file");
  flags.beta_opt = app->add_option("--beta", flags.betas, "inverse temperature(s), comma separated")
                       ->delimiter(',');
  struct Spec {
    const char* flag;
    const char* key;
    const char* help;
    bool sampling_only;
  };
  const Spec specs[] = {
      {"--epsilon", "epsilon", "on-site potential of occupied sites", false},
      {"--t", "t", "hopping energy", false},
      {"--n-max", "n_max", "largest correlation offset", false},
      {"--out", "out", "output CSV path (default stdout)", false},
      {"--quad-tol", "quad_tol", "relative quadrature tolerance", false},
      {"--lattice-size", "lattice_size", "number of lattice sites L", true},
      {"--pattern", "pattern", "free, striped or an explicit 0/1 list", true},
      {"--p", "p", "Trotter number (steps per walk)", true},
      {"--walks", "walks", "number of sampled walks per beta", true},
      {"--seed", "seed", "64-bit random seed", true},
      {"--segment-fraction", "segment_fraction", "fraction of the walk redrawn per proposal", true},
      {"--translation-probability", "translation_probability", "share of rigid-translation proposals", true},
      {"--burn-in", "burn_in", "proposals before sampling (default 10 p)", true},
      {"--thin", "thin", "proposals between samples", true},
      {"--block-size", "block_size", "samples per statistics block", true},
      {"--chains", "chains", "independent chains per beta", true},
      {"--threads", "threads", "worker threads (0 = all cores)", true},
  };
  for (const auto& s : specs) {
    if (s.sampling_only && !sampling) continue;
    auto& slot = flags.values[s.key];
    flags.options.emplace_back(s.key, app->add_option(s.flag, slot, s.help));
  }
}

ExperimentConfig resolve(Mode mode, const FlagSet& flags) {
  ExperimentConfig config;
  config.mode = mode;
  if (mode == Mode::ExactFree) config.lattice.pattern = "free";
  if (!flags.config_path.empty()) config = latpimc::experiment::load_config_file(flags.config_path, config);
  config.mode = mode;
  if (flags.beta_opt != nullptr && flags.beta_opt->count() > 0) {
    std::string joined;
    for (const auto& b : flags.betas) joined += (joined.empty() ? "" : ",") + b;
    latpimc::experiment::apply_setting(config, "beta", joined);
  }
  for (const auto& [key, opt] : flags.options) {
    if (opt->count() > 0) latpimc::experiment::apply_setting(config, key, flags.values.at(key));
  }
  config.validate();
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice path-integral Monte Carlo and exact reference results"};
  app.require_subcommand(1);

  auto* exact = app.add_subcommand("exact", "closed-form observables");
  exact->require_subcommand(1);
  FlagSet free_flags, striped_flags, pimc_flags, compare_flags;
  auto* exact_free = exact->add_subcommand("free", "free particle on an infinite chain");
  add_flags(exact_free, free_flags, false);
  auto* exact_striped = exact->add_subcommand("striped", "alternating on-site potential");
  add_flags(exact_striped, striped_flags, false);
  auto* pimc = app.add_subcommand("pimc", "sample closed walks and estimate observables");
  add_flags(pimc, pimc_flags, true);
  auto* compare = app.add_subcommand("compare", "Monte Carlo against the exact results");
  add_flags(compare, compare_flags, true);

  CLI11_PARSE(app, argc, argv);

  try {
    Mode mode = Mode::Pimc;
    const FlagSet* flags = &pimc_flags;
    if (exact_free->parsed()) {
      mode = Mode::ExactFree;
      flags = &free_flags;
    } else if (exact_striped->parsed()) {
      mode = Mode::ExactStriped;
      flags = &striped_flags;
    } else if (compare->parsed()) {
      mode = Mode::Compare;
      flags = &compare_flags;
    }
    const ExperimentConfig config = resolve(mode, *flags);
    return latpimc::experiment::run_experiment(config, std::cout, std::cerr);
  } catch (const latpimc::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
