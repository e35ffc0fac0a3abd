#include "chaosmab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chaosmab {

std::string_view version_string() {
#ifdef CHAOSMAB_VERSION
  return CHAOSMAB_VERSION;
#else
  return "v0.1.0";
#endif
}

std::string format_g9(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

std::string json_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

void write_cdr_csv(const std::filesystem::path& path,
                   std::span<const SweepResult> sweeps) {
  std::string body = "policy,arms,play,cdr\n";
  for (const auto& s : sweeps) {
    const std::string prefix =
        std::string(policy_name(s.kind)) + "," + std::to_string(s.arms) + ",";
    for (std::size_t t = 0; t < s.cdr.size(); ++t) {
      body += prefix;
      body += std::to_string(t + 1);
      body += ',';
      body += format_g9(s.cdr[t]);
      body += '\n';
    }
  }
  write_file(path, body);
}

void write_regret_csv(const std::filesystem::path& path,
                      std::span<const SweepResult> sweeps) {
  std::string body = "policy,arms,play,regret\n";
  for (const auto& s : sweeps) {
    const std::string prefix =
        std::string(policy_name(s.kind)) + "," + std::to_string(s.arms) + ",";
    for (std::size_t t = 0; t < s.regret.size(); ++t) {
      body += prefix;
      body += std::to_string(t + 1);
      body += ',';
      body += format_g9(s.regret[t]);
      body += '\n';
    }
  }
  write_file(path, body);
}

void write_scaling_csv(const std::filesystem::path& path,
                       std::span<const SweepResult> sweeps) {
  // sweeps that never reached the threshold are omitted
  std::string body = "policy,arms,plays_to_threshold\n";
  for (const auto& s : sweeps) {
    if (!s.crossing) continue;
    body += policy_name(s.kind);
    body += ',';
    body += std::to_string(s.arms);
    body += ',';
    body += std::to_string(*s.crossing);
    body += '\n';
  }
  write_file(path, body);
}

namespace {

std::string fit_object(const FitRecord& record) {
  std::string out = "{\"policy\":\"";
  out += policy_name(record.kind);
  out += "\",\"c\":";
  out += format_g9(record.fit.coefficient);
  out += ",\"exponent\":";
  out += format_g9(record.fit.exponent);
  out += ",\"residual\":";
  out += format_g9(record.fit.residual);
  out += ",\"points\":[";
  for (std::size_t i = 0; i < record.points.size(); ++i) {
    if (i) out += ',';
    out += '[';
    out += format_g9(record.points[i].first);
    out += ',';
    out += format_g9(record.points[i].second);
    out += ']';
  }
  out += "]}";
  return out;
}

}  // namespace

void write_fit_json(const std::filesystem::path& path,
                    std::span<const FitRecord> fits) {
  std::string body;
  if (fits.size() == 1) {
    body = fit_object(fits[0]);
  } else {
    body = "[";
    for (std::size_t i = 0; i < fits.size(); ++i) {
      if (i) body += ',';
      body += fit_object(fits[i]);
    }
    body += "]";
  }
  body += '\n';
  write_file(path, body);
}

namespace {

std::string config_json(const ExperimentConfig& config) {
  std::string out = "{";
  out += "\"policy\":\"";
  for (std::size_t i = 0; i < config.policies.size(); ++i) {
    if (i) out += ',';
    out += policy_name(config.policies[i]);
  }
  out += "\",\"arms\":[";
  for (std::size_t i = 0; i < config.arm_counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(config.arm_counts[i]);
  }
  out += "],\"plays\":" + (config.plays ? std::to_string(*config.plays) : std::string("null"));
  out += ",\"cycles\":" + std::to_string(config.cycles);
  out += ",\"master_seed\":" + std::to_string(config.master_seed);
  out += ",\"k\":" + format_g9(config.k);
  out += ",\"grid_m\":" + std::to_string(config.grid_side);
  out += ",\"mode\":\"" + std::string(map_mode_name(config.mode)) + "\"";
  out += ",\"jitter\":" + format_g9(config.jitter);
  out += ",\"threshold\":" + format_g9(config.threshold);
  out += ",\"regret_eval_play\":" + std::to_string(config.regret_eval_play);
  out += ",\"tie_break_seed\":" +
         (config.tie_break_seed ? std::to_string(*config.tie_break_seed)
                                : std::string("null"));
  out += ",\"threads\":" + std::to_string(config.threads);
  out += ",\"out\":\"" + json_escape(config.out_dir) + "\"";
  out += ",\"map\":{\"a\":" + format_g9(config.map.a);
  out += ",\"b\":" + format_g9(config.map.b);
  out += ",\"alpha\":" + format_g9(config.map.alpha);
  out += ",\"f\":" + format_g9(config.map.f);
  out += ",\"beta\":" + format_g9(config.map.beta);
  out += ",\"phi\":" + format_g9(config.map.phi) + "}";
  if (!config.custom_probabilities.empty()) {
    out += ",\"probabilities\":[";
    for (std::size_t i = 0; i < config.custom_probabilities.size(); ++i) {
      if (i) out += ',';
      out += format_g9(config.custom_probabilities[i]);
    }
    out += "]";
  }
  out += "}";
  return out;
}

}  // namespace

void write_summary_json(const std::filesystem::path& path,
                        const ExperimentConfig& config,
                        std::span<const SweepResult> sweeps,
                        std::span<const FitRecord> fits) {
  std::string body = "{\"version\":\"" + json_escape(version_string()) + "\"";
  body += ",\"config\":" + config_json(config);
  body += ",\"results\":[";
  for (std::size_t i = 0; i < sweeps.size(); ++i) {
    const auto& s = sweeps[i];
    if (i) body += ',';
    body += "{\"policy\":\"";
    body += policy_name(s.kind);
    body += "\",\"arms\":" + std::to_string(s.arms);
    body += ",\"plays\":" + std::to_string(s.plays);
    body += ",\"cycles\":" + std::to_string(s.cycles);
    body += ",\"plays_to_threshold\":";
    body += s.crossing ? std::to_string(*s.crossing) : "null";
    body += ",\"regret_at_eval\":";
    body += s.regret_at_eval ? format_g9(*s.regret_at_eval) : "null";
    body += ",\"final_cdr\":";
    body += s.cdr.empty() ? "null" : format_g9(s.cdr.back());
    body += "}";
  }
  body += "],\"fits\":[";
  for (std::size_t i = 0; i < fits.size(); ++i) {
    if (i) body += ',';
    body += fit_object(fits[i]);
  }
  body += "]}\n";
  write_file(path, body);
}

void write_trace_csv(const std::filesystem::path& path, const RunTrace& trace) {
  std::string body = "play,arm,hit\n";
  for (std::size_t t = 0; t < trace.plays.size(); ++t) {
    body += std::to_string(t + 1);
    body += ',';
    body += std::to_string(trace.plays[t].arm + 1);
    body += ',';
    body += trace.plays[t].hit ? '1' : '0';
    body += '\n';
  }
  write_file(path, body);
}

void write_field_csv(const std::filesystem::path& path, int side,
                     std::span<const std::pair<std::uint64_t, std::vector<double>>> frames) {
  std::string body = "frame,row,col,intensity\n";
  for (const auto& [frame, states] : frames) {
    for (int r = 0; r < side; ++r) {
      for (int c = 0; c < side; ++c) {
        body += std::to_string(frame);
        body += ',';
        body += std::to_string(r + 1);
        body += ',';
        body += std::to_string(c + 1);
        body += ',';
        body += format_g9(states[static_cast<std::size_t>(r * side + c)]);
        body += '\n';
      }
    }
  }
  write_file(path, body);
}

void write_histogram_csv(const std::filesystem::path& path, const Histogram& histogram) {
  std::string body = "bin_lo,bin_hi,probability\n";
  for (std::size_t i = 0; i < histogram.probability.size(); ++i) {
    body += format_g9(histogram.edges[i]);
    body += ',';
    body += format_g9(histogram.edges[i + 1]);
    body += ',';
    body += format_g9(histogram.probability[i]);
    body += '\n';
  }
  write_file(path, body);
}

void write_bifurcation_csv(const std::filesystem::path& path,
                           std::span<const BifurcationPoint> points) {
  std::string body = "beta,sample\n";
  for (const auto& point : points) {
    for (double s : point.samples) {
      body += format_g9(point.beta);
      body += ',';
      body += format_g9(s);
      body += '\n';
    }
  }
  write_file(path, body);
}

void write_lyapunov_csv(const std::filesystem::path& path,
                        std::span<const std::pair<double, double>> lambdas) {
  std::string body = "beta,lambda\n";
  for (const auto& [beta, lambda] : lambdas) {
    body += format_g9(beta);
    body += ',';
    body += format_g9(lambda);
    body += '\n';
  }
  write_file(path, body);
}

std::vector<ScalingRow> read_scaling_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<ScalingRow> rows;
  std::string line;
  bool header = true;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::stringstream ss(line);
    ScalingRow row;
    std::string arms, plays;
    if (!std::getline(ss, row.policy, ',') || !std::getline(ss, arms, ',') ||
        !std::getline(ss, plays))
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": expected policy,arms,plays_to_threshold");
    row.arms = std::stod(arms);
    row.plays = std::stod(plays);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_benchmark_outputs(const ExperimentConfig& config,
                             const BenchmarkResult& result) {
  namespace fs = std::filesystem;
  const fs::path dir(config.out_dir);
  std::vector<fs::path> written;
  try {
    fs::create_directories(dir);
    const auto emit = [&](const fs::path& name, auto&& writer) {
      const fs::path full = dir / name;
      writer(full);
      written.push_back(full);
    };
    emit("cdr.csv", [&](const fs::path& p) { write_cdr_csv(p, result.sweeps); });
    emit("regret.csv", [&](const fs::path& p) { write_regret_csv(p, result.sweeps); });
    emit("scaling.csv", [&](const fs::path& p) { write_scaling_csv(p, result.sweeps); });
    emit("fit.json", [&](const fs::path& p) { write_fit_json(p, result.fits); });
    emit("summary.json", [&](const fs::path& p) {
      write_summary_json(p, config, result.sweeps, result.fits);
    });
  } catch (...) {
    std::error_code ec;
    for (const auto& p : written) fs::remove(p, ec);
    throw;
  }
}

}  // namespace chaosmab
