#include "latpimc/experiment/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "latpimc/errors.hpp"
#include "latpimc/statistics.hpp"

namespace latpimc::experiment {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string normalize_key(std::string key) {
  key = trim(key);
  for (auto& c : key) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (c == '-') c = '_';
  }
  return key;
}

double to_double(const std::string& key, const std::string& text) {
  const std::string v = trim(text);
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ConfigError("setting '" + key + "': expected a number, got '" + text + "'");
  }
  if (used != v.size()) throw ConfigError("setting '" + key + "': trailing characters in '" + text + "'");
  return x;
}

long long to_integer(const std::string& key, const std::string& text) {
  const double x = to_double(key, text);
  if (x != static_cast<double>(static_cast<long long>(x))) {
    throw ConfigError("setting '" + key + "': expected an integer, got '" + text + "'");
  }
  return static_cast<long long>(x);
}

std::uint64_t to_seed(const std::string& key, const std::string& text) {
  const std::string v = trim(text);
  std::size_t used = 0;
  std::uint64_t x = 0;
  try {
    x = std::stoull(v, &used, 0);
  } catch (const std::exception&) {
    throw ConfigError("setting '" + key + "': expected an unsigned integer, got '" + text + "'");
  }
  if (used != v.size()) throw ConfigError("setting '" + key + "': trailing characters in '" + text + "'");
  return x;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string cur;
  std::string v = trim(text);
  if (!v.empty() && v.front() == '[' && v.back() == ']') v = v.substr(1, v.size() - 2);
  for (char c : v) {
    if (c == ',' || c == ' ' || c == '\t' || c == ';') {
      if (!cur.empty()) items.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) items.push_back(cur);
  return items;
}

void flatten_json(const nlohmann::json& node, const std::string& prefix,
                  std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      flatten_json(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
    return;
  }
  if (prefix.empty()) throw ConfigError("JSON configuration must be an object");
  if (node.is_array()) {
    std::string joined;
    for (const auto& item : node) {
      if (item.is_structured()) throw ConfigError("setting '" + prefix + "': nested arrays are not supported");
      if (!joined.empty()) joined += ",";
      joined += item.is_string() ? item.get<std::string>() : item.dump();
    }
    out.emplace_back(prefix, joined);
  } else if (node.is_string()) {
    out.emplace_back(prefix, node.get<std::string>());
  } else {
    out.emplace_back(prefix, node.dump());
  }
}

}  // namespace

Mode parse_mode(const std::string& text) {
  const std::string m = normalize_key(text);
  if (m == "exact_free") return Mode::ExactFree;
  if (m == "exact_striped") return Mode::ExactStriped;
  if (m == "pimc") return Mode::Pimc;
  if (m == "compare") return Mode::Compare;
  throw ConfigError("unknown mode '" + text + "' (expected exact-free, exact-striped, pimc or compare)");
}

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::ExactFree: return "exact-free";
    case Mode::ExactStriped: return "exact-striped";
    case Mode::Pimc: return "pimc";
    case Mode::Compare: return "compare";
  }
  return "?";
}

LatticeConfig LatticeSpec::build() const {
  if (pattern == "free") return LatticeConfig::free(L);
  if (pattern == "striped") return LatticeConfig::striped(L, epsilon);
  if (pattern == "explicit") return LatticeConfig::explicit_pattern(occupancy, epsilon);
  throw ConfigError("unknown lattice pattern '" + pattern + "'");
}

std::vector<double> default_free_betas() { return {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}; }

std::vector<double> default_striped_betas() { return {0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 10.0}; }

std::vector<double> default_striped_exact_betas() {
  return {0.0, 0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0};
}

std::vector<double> ExperimentConfig::beta_grid() const {
  if (!betas.empty()) return betas;
  switch (mode) {
    case Mode::ExactFree: return default_free_betas();
    case Mode::ExactStriped: return default_striped_exact_betas();
    default: return lattice.is_free() ? default_free_betas() : default_striped_betas();
  }
}

long ExperimentConfig::effective_block_size() const {
  return block_size > 0 ? block_size : default_block_size(schedule.n_samples / std::max(1, chains));
}

void ExperimentConfig::validate() const {
  for (double b : beta_grid()) {
    if (!std::isfinite(b) || b < 0.0) throw ConfigError("beta values must be finite and >= 0");
  }
  if (!std::isfinite(t) || t <= 0.0) throw ConfigError("t must be > 0");
  if (p < 2) throw ConfigError("p must be >= 2");
  schedule.validate();
  if (chains < 1) throw ConfigError("chains must be >= 1");
  if (schedule.n_samples < chains) throw ConfigError("walks must be at least the number of chains");
  if (block_size < 0) throw ConfigError("block_size must be >= 0");
  if (n_max < 0) throw ConfigError("n_max must be >= 0");
  if (!(quad_tol > 0.0 && quad_tol < 1.0)) throw ConfigError("quad_tol must lie in (0, 1)");
  if (threads < 0) throw ConfigError("threads must be >= 0");
  (void)lattice.build();
}

void apply_setting(ExperimentConfig& c, const std::string& raw_key, const std::string& value) {
  const std::string key = normalize_key(raw_key);
  if (key == "mode") {
    c.mode = parse_mode(trim(value));
  } else if (key == "beta" || key == "betas") {
    c.betas.clear();
    for (const auto& item : split_list(value)) c.betas.push_back(to_double(key, item));
    if (c.betas.empty()) throw ConfigError("setting 'beta' needs at least one value");
  } else if (key == "t") {
    c.t = to_double(key, value);
  } else if (key == "p") {
    c.p = static_cast<int>(to_integer(key, value));
  } else if (key == "walks" || key == "n_samples") {
    c.schedule.n_samples = static_cast<long>(to_integer(key, value));
  } else if (key == "burn_in") {
    c.schedule.burn_in = static_cast<long>(to_integer(key, value));
  } else if (key == "thin") {
    c.schedule.thin = static_cast<long>(to_integer(key, value));
  } else if (key == "segment_fraction") {
    c.schedule.segment_fraction = to_double(key, value);
  } else if (key == "translation_probability") {
    c.schedule.translation_probability = to_double(key, value);
  } else if (key == "block_size") {
    c.block_size = static_cast<long>(to_integer(key, value));
  } else if (key == "chains") {
    c.chains = static_cast<int>(to_integer(key, value));
  } else if (key == "seed") {
    c.seed = to_seed(key, value);
  } else if (key == "out") {
    c.out = trim(value);
  } else if (key == "n_max") {
    c.n_max = static_cast<int>(to_integer(key, value));
  } else if (key == "quad_tol") {
    c.quad_tol = to_double(key, value);
  } else if (key == "threads") {
    c.threads = static_cast<int>(to_integer(key, value));
  } else if (key == "lattice.l" || key == "lattice_size" || key == "l") {
    c.lattice.L = static_cast<int>(to_integer(key, value));
  } else if (key == "lattice.epsilon" || key == "epsilon") {
    c.lattice.epsilon = to_double(key, value);
  } else if (key == "lattice.pattern" || key == "pattern") {
    const std::string v = trim(value);
    if (v == "free" || v == "striped") {
      c.lattice.pattern = v;
    } else {
      c.lattice.occupancy.clear();
      for (const auto& item : split_list(v)) {
        const auto n = to_integer(key, item);
        if (n != 0 && n != 1) throw ConfigError("explicit occupancy entries must be 0 or 1");
        c.lattice.occupancy.push_back(static_cast<std::uint8_t>(n));
      }
      if (c.lattice.occupancy.empty()) throw ConfigError("unknown lattice pattern '" + v + "'");
      c.lattice.pattern = "explicit";
      c.lattice.L = static_cast<int>(c.lattice.occupancy.size());
    }
  } else {
    throw ConfigError("unknown setting '" + raw_key + "'");
  }
}

std::vector<std::pair<std::string, std::string>> parse_settings(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(std::string("invalid JSON configuration: ") + e.what());
    }
    flatten_json(doc, "", out);
    return out;
  }
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("configuration line " + std::to_string(lineno) + " is not key = value");
    }
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  for (const auto& [k, v] : parse_settings(buf.str())) apply_setting(base, k, v);
  return base;
}

}  // namespace latpimc::experiment
