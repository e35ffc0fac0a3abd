#include "chaosmab/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "chaosmab/bandit.hpp"

namespace chaosmab {

void ExperimentConfig::validate() const {
  if (policies.empty()) throw std::invalid_argument("no policy selected");
  if (arm_counts.empty()) throw std::invalid_argument("no arm counts selected");
  if (cycles < 1) throw std::invalid_argument("cycles must be at least 1");
  if (threads < 0) throw std::invalid_argument("threads must be non-negative");
  if (jitter < 0.0) throw std::invalid_argument("jitter must be non-negative");
  if (!(threshold > 0.0 && threshold < 1.0))
    throw std::invalid_argument("threshold must lie in (0, 1)");
  if (grid_side < 0) throw std::invalid_argument("grid_m must be non-negative");
  map.validate();
  for (int n : arm_counts) {
    if (!custom_probabilities.empty() &&
        static_cast<int>(custom_probabilities.size()) != n)
      throw std::invalid_argument("explicit probability list length " +
                                  std::to_string(custom_probabilities.size()) +
                                  " does not match arms=" + std::to_string(n));
    geometry_for(n).validate();
  }
}

std::vector<double> ExperimentConfig::probabilities_for(int arms) const {
  if (!custom_probabilities.empty()) return custom_probabilities;
  return standard_probabilities(arms);
}

GridGeometry ExperimentConfig::geometry_for(int arms) const {
  GridGeometry g;
  g.arms = arms;
  g.side = grid_side > 0
               ? grid_side
               : static_cast<int>(std::ceil(std::sqrt(static_cast<double>(arms))));
  return g;
}

std::size_t auto_play_budget(PolicyKind kind, int arms, std::size_t floor_plays) {
  // crossing fits measured on the standard pattern at 100 cycles, times a
  // safety factor (x4 for tug-of-war, >= x2 for the baselines)
  double predicted = 0.0;
  switch (kind) {
    case PolicyKind::tow_chaos:
    case PolicyKind::tow_uniform_noise:
      predicted = 120.0 * std::pow(arms, 0.86);
      break;
    case PolicyKind::thompson:
      predicted = 40.0 * std::pow(arms, 1.10);
      break;
    case PolicyKind::ucb1tuned:
      predicted = 28.0 * std::pow(arms, 1.23);
      break;
  }
  return std::max(static_cast<std::size_t>(std::ceil(predicted)), floor_plays);
}

std::size_t ExperimentConfig::resolved_plays(PolicyKind kind, int arms) const {
  return plays ? *plays : auto_play_budget(kind, arms, regret_eval_play);
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key " + key + ": cannot parse number \"" + value + "\"");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key " + key + ": cannot parse integer \"" + value + "\"");
  }
}

std::vector<double> parse_double_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_double(key, item));
  }
  return out;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(static_cast<int>(parse_u64("arms", item)));
  }
  return out;
}

std::vector<PolicyKind> parse_policy_list(const std::string& text) {
  std::vector<PolicyKind> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_policy(item));
  }
  return out;
}

void apply_config_entry(ExperimentConfig& config, const std::string& key,
                        const std::string& value) {
  if (key == "policy") {
    config.policies = parse_policy_list(value);
  } else if (key == "arms") {
    config.arm_counts = parse_int_list(value);
  } else if (key == "probabilities") {
    config.custom_probabilities = parse_double_list(key, value);
  } else if (key == "plays") {
    if (value == "auto")
      config.plays.reset();
    else
      config.plays = parse_u64(key, value);
  } else if (key == "cycles") {
    config.cycles = static_cast<int>(parse_u64(key, value));
  } else if (key == "master_seed" || key == "seed") {
    config.master_seed = parse_u64(key, value);
  } else if (key == "k") {
    config.k = parse_double(key, value);
  } else if (key == "grid_m") {
    config.grid_side = static_cast<int>(parse_u64(key, value));
  } else if (key == "mode") {
    config.mode = parse_map_mode(value);
  } else if (key == "jitter") {
    config.jitter = parse_double(key, value);
  } else if (key == "threshold") {
    config.threshold = parse_double(key, value);
  } else if (key == "regret_eval_play") {
    config.regret_eval_play = parse_u64(key, value);
  } else if (key == "tie_break_seed") {
    config.tie_break_seed = parse_u64(key, value);
  } else if (key == "threads") {
    config.threads = static_cast<int>(parse_u64(key, value));
  } else if (key == "out") {
    config.out_dir = value;
  } else if (key == "map_a" || key == "map_b" || key == "map_alpha" ||
             key == "map_beta" || key == "map_phi") {
    const double v = parse_double(key, value);
    MapParams m = config.map;
    if (key == "map_a") m.a = v;
    if (key == "map_b") m.b = v;
    if (key == "map_alpha") {
      m.alpha = v;
      m.f = 1.0 / v;
    }
    if (key == "map_beta") m.beta = v;
    if (key == "map_phi") m.phi = v;
    config.map = m;
  } else {
    throw std::invalid_argument("unknown config key \"" + key + "\"");
  }
}

ExperimentConfig load_config_file(const std::filesystem::path& path,
                                  ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                  ": expected key=value, got \"" + line + "\"");
    try {
      apply_config_entry(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                  ": " + e.what());
    }
  }
  return base;
}

}  // namespace chaosmab
