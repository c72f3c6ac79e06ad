#include "ehrelay_tools/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "ehrelay/baseline.hpp"
#include "ehrelay/dc.hpp"
#include "ehrelay/ndc.hpp"
#include "ehrelay/profiles.hpp"

namespace ehrelay::tools {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string(what) + ": " + e.what());
  }
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ConfigError(std::string("config: missing required field \"") + key + "\"");
  }
  return doc.at(key);
}

double number(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (!v.is_number()) throw ConfigError(std::string("config: \"") + key + "\" must be a number");
  return v.get<double>();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> profile_from(const json& spec, Node node, const std::filesystem::path& base) {
  if (spec.is_array()) {
    std::vector<double> out;
    for (const json& v : spec) {
      if (!v.is_number()) throw ConfigError("config: energy amounts must be numbers");
      out.push_back(v.get<double>());
    }
    return out;
  }
  if (spec.is_string()) {
    return load_profile(read_file(base / spec.get<std::string>())).amounts();
  }
  if (spec.is_object() && spec.contains("sinusoid")) {
    const json& s = spec.at("sinusoid");
    SinusoidSpec sin;
    sin.amplitude = number(s, "A");
    sin.n_blocks = static_cast<std::size_t>(number(s, "N"));
    if (s.contains("phase")) sin.phase = number(s, "phase");
    sin.node = node;
    return sinusoidal_profile(sin).amounts();
  }
  throw ConfigError("config: energy profile must be an array, a file path or a sinusoid");
}

void append_optional(std::string& out, const std::optional<double>& v) {
  out += ',';
  if (v) out += format_double(*v);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<double> h0_grid(double start, double stop, double step) {
  if (!(step > 0.0)) throw ConfigError("h0 grid: step must be positive");
  std::vector<double> out;
  const double span = (stop - start) / step;
  if (span < -1e-9) return out;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  for (std::size_t k = 0; k < count; ++k) {
    // Rounding keeps 0.15 from printing as 0.15000000000000002.
    out.push_back(std::round((start + static_cast<double>(k) * step) * 1e12) / 1e12);
  }
  return out;
}

SweepConfig default_sweep_config() {
  SweepConfig config;
  config.theta = 5.0 * std::numbers::pi / 4.0;
  config.h0_values = h0_grid(0.0, 0.95, 0.05);
  return config;
}

void validate(const SweepConfig& config) {
  if (config.h0_values.empty()) throw ConfigError("sweep: h0 grid is empty");
  for (double h0 : config.h0_values) {
    if (!(h0 >= 0.0 && h0 < 1.0)) {
      throw ConfigError("sweep: h0 = " + format_double(h0) + " outside [0, 1)");
    }
  }
  if (!(config.block_len > 0.0)) throw ConfigError("sweep: B must be positive");
  if (config.n_blocks == 0) throw ConfigError("sweep: N must be at least 1");
  if (!(config.amp_source > 0.0) || !(config.amp_relay > 0.0)) {
    throw ConfigError("sweep: amplitudes must be positive");
  }
  if (config.schemes.empty()) throw ConfigError("sweep: no schemes selected");
}

Mode parse_scheme(std::string_view name) {
  if (name == "dc") return Mode::kDc;
  if (name == "ndc") return Mode::kNdc;
  if (name == "greedy") return Mode::kGreedy;
  throw ConfigError("unknown scheme \"" + std::string(name) + "\"");
}

SweepConfig parse_sweep_config(std::string_view text, const std::filesystem::path& base_dir) {
  const json doc = parse_json(text, "sweep config");
  SweepConfig config;
  config.block_len = number(doc, "B");
  const double n = number(doc, "N");
  if (!(n >= 1.0) || n != std::floor(n)) throw ConfigError("config: \"N\" must be a positive integer");
  config.n_blocks = static_cast<std::size_t>(n);
  config.amp_source = number(doc, "A_S");
  config.amp_relay = number(doc, "A_R");
  config.theta = number(doc, "theta");

  const json& h0 = require(doc, "h0");
  if (h0.is_array()) {
    for (const json& v : h0) {
      if (!v.is_number()) throw ConfigError("config: h0 entries must be numbers");
      config.h0_values.push_back(v.get<double>());
    }
  } else if (h0.is_object()) {
    config.h0_values = h0_grid(number(h0, "start"), number(h0, "stop"), number(h0, "step"));
  } else {
    throw ConfigError("config: \"h0\" must be a list or {start, stop, step}");
  }

  if (doc.contains("schemes")) {
    config.schemes.clear();
    for (const json& s : doc.at("schemes")) {
      if (!s.is_string()) throw ConfigError("config: schemes must be strings");
      config.schemes.push_back(parse_scheme(s.get<std::string>()));
    }
  }
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) throw ConfigError("config: \"seed\" must be a non-negative integer");
    config.seed = doc.at("seed").get<std::uint64_t>();
  }
  const json& output = require(doc, "output");
  if (!output.is_string()) throw ConfigError("config: \"output\" must be a string");
  config.output = output.get<std::string>();
  if (config.output != "-" && std::filesystem::path(config.output).is_relative() &&
      !base_dir.empty()) {
    config.output = (base_dir / config.output).string();
  }
  validate(config);
  return config;
}

std::vector<SweepRow> run_sweep_rows(const SweepConfig& config) {
  validate(config);
  const EnergyProfile source = sinusoidal_profile(
      {config.amp_source, config.n_blocks, std::numbers::pi / 2, Node::kSource});
  const EnergyProfile relay =
      sinusoidal_profile({config.amp_relay, config.n_blocks, config.theta, Node::kRelay});
  auto selected = [&](Mode m) {
    return std::find(config.schemes.begin(), config.schemes.end(), m) != config.schemes.end();
  };
  std::vector<SweepRow> rows;
  for (double h0 : config.h0_values) {
    const RelayInstance instance(config.block_len, ChannelGains{1.0, 1.0, h0}, source, relay);
    SweepRow row;
    row.h0 = h0;
    if (selected(Mode::kDc)) row.dc = solve_dc(instance).avg_throughput;
    if (selected(Mode::kNdc)) row.ndc = solve_ndc(instance).avg_throughput;
    if (selected(Mode::kGreedy)) row.greedy = greedy_schedule(instance).avg_throughput;
    row.ndc_strictly_better = ndc_strictly_better(instance);
    rows.push_back(row);
  }
  return rows;
}

std::string run_sweep(const SweepConfig& config) {
  std::string out = "h0,dc_bps_hz,ndc_bps_hz,greedy_bps_hz,ndc_strictly_better\n";
  for (const SweepRow& row : run_sweep_rows(config)) {
    out += format_double(row.h0);
    append_optional(out, row.dc);
    append_optional(out, row.ndc);
    append_optional(out, row.greedy);
    out += row.ndc_strictly_better ? ",1\n" : ",0\n";
  }
  return out;
}

RelayInstance parse_instance_config(std::string_view text, const std::filesystem::path& base_dir) {
  const json doc = parse_json(text, "instance config");
  const double b = number(doc, "B");
  ChannelGains gains;
  if (doc.contains("gains")) {
    const json& g = doc.at("gains");
    gains = ChannelGains{number(g, "h_sr"), number(g, "h_rd"), number(g, "h_sd")};
  } else {
    gains.h_sd = number(doc, "h0");
  }
  try {
    return RelayInstance(b, gains,
                         EnergyProfile(profile_from(require(doc, "source"), Node::kSource, base_dir),
                                       Node::kSource),
                         EnergyProfile(profile_from(require(doc, "relay"), Node::kRelay, base_dir),
                                       Node::kRelay));
  } catch (const InvalidInstance& e) {
    throw ConfigError(std::string("instance: ") + e.what());
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  }
}

std::string emit_schedule(const RelayInstance& instance, Mode scheme) {
  SolveReport report;
  switch (scheme) {
    case Mode::kDc: report = solve_dc(instance); break;
    case Mode::kNdc: report = solve_ndc(instance); break;
    case Mode::kGreedy: report = greedy_schedule(instance); break;
  }
  auto contains = [](const std::vector<std::size_t>& v, std::size_t k) {
    return std::find(v.begin(), v.end(), k) != v.end();
  };
  std::string out = "block,P_S,P_R_next,R,R_B_next,tight_source,tight_relay\n";
  for (std::size_t k = 0; k < instance.n_blocks(); ++k) {
    out += std::to_string(k + 1) + ',' + format_double(report.schedule.source_power[k]) + ',' +
           format_double(report.schedule.relay_power[k]) + ',' +
           format_double(report.rates.source_rate[k]) + ',' +
           format_double(report.rates.binning_rate[k]) + ',' +
           (contains(report.tight_source_blocks, k) ? '1' : '0') + ',' +
           (contains(report.tight_relay_blocks, k) ? '1' : '0') + '\n';
  }
  return out;
}

VerifySummary run_verify(const VerifyOptions& options) {
  if (options.max_n > 4) throw ConfigError("verify: --max-n must be at most 4");
  if (options.max_n == 0) throw ConfigError("verify: --max-n must be at least 1");
  SamplingSpec sampling = options.sampling;
  sampling.min_blocks = std::min(sampling.min_blocks, options.max_n);
  sampling.max_blocks = options.max_n;
  GridSpec grid = options.grid;
  grid.max_blocks = std::max<std::size_t>(grid.max_blocks, options.max_n);

  VerifySummary summary;
  summary.instances = options.instances;
  for (std::size_t k = 0; k < options.instances; ++k) {
    const std::uint64_t seed = options.seed + k;
    const RelayInstance instance = sample_instance(seed, sampling);
    SolveReport dc = solve_dc(instance);
    const SolveReport ndc = solve_ndc(instance);
    const SolveReport greedy = greedy_schedule(instance);
    if (options.inject_fault && instance.n_blocks() > 0) {
      dc.schedule.source_power.back() *= 0.5;
    }
    const std::size_t before = summary.findings.size();

    const OptimalityReport p1 =
        compare_with_oracle(dc.avg_throughput, brute_force_p1(instance, grid).value, seed);
    const OptimalityReport p2 =
        compare_with_oracle(ndc.avg_throughput, brute_force_p2(instance, grid).value, seed);
    if (p1.gap >= summary.dc.gap) summary.dc = p1;
    if (p2.gap >= summary.ndc.gap) summary.ndc = p2;
    if (p1.gap > 1e-3) summary.findings.push_back({seed, "DC below oracle by " + format_double(p1.gap)});
    if (p2.gap > 1e-3) summary.findings.push_back({seed, "NDC below oracle by " + format_double(p2.gap)});
    for (const PropertyViolation& v : verify_propositions(instance, dc, ndc, &greedy)) {
      summary.findings.push_back(
          {seed, std::string(to_string(v.mode)) + ": " + v.property + ": " + v.detail});
    }
    if (options.seed_file && summary.findings.size() > before) {
      append_failing_seed(*options.seed_file, seed);
    }
  }
  return summary;
}

std::string format_summary(const VerifySummary& summary) {
  std::ostringstream os;
  os << "instances: " << summary.instances << '\n'
     << "max P1 gap: " << format_double(summary.dc.gap) << '\n'
     << "max P2 gap: " << format_double(summary.ndc.gap) << '\n'
     << "violations: " << summary.findings.size() << '\n';
  for (const VerifyFinding& f : summary.findings) {
    os << "  seed " << f.instance_seed << ": " << f.description << '\n';
  }
  return os.str();
}

}  // namespace ehrelay::tools
