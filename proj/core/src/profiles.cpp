#include "ehrelay/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include <json.hpp>

namespace ehrelay {

namespace {

using nlohmann::json;

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// Line of the index-th element of the top-level "amounts" array.
std::size_t amount_line(std::string_view text, std::size_t index) {
  std::size_t pos = text.find("\"amounts\"");
  if (pos == std::string_view::npos) return 0;
  pos = text.find('[', pos);
  if (pos == std::string_view::npos) return 0;
  std::size_t element = 0;
  int depth = 0;
  for (std::size_t k = pos + 1; k < text.size(); ++k) {
    const char ch = text[k];
    if (ch == '[' || ch == '{') ++depth;
    else if ((ch == ']' || ch == '}') && depth-- == 0) break;
    else if (ch == ',' && depth == 0) ++element;
    else if (element == index && !std::isspace(static_cast<unsigned char>(ch))) {
      return line_at(text, k);
    }
  }
  return 0;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

EnergyProfile sinusoidal_profile(const SinusoidSpec& spec) {
  if (spec.n_blocks == 0) throw InvalidInstance("sinusoidal_profile: N must be at least 1");
  if (!(spec.amplitude > 0.0) || !std::isfinite(spec.amplitude)) {
    throw InvalidInstance("sinusoidal_profile: amplitude must be positive");
  }
  std::vector<double> amounts(spec.n_blocks);
  const double n = static_cast<double>(spec.n_blocks);
  for (std::size_t i = 0; i < spec.n_blocks; ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / n + spec.phase;
    amounts[i] = std::max(spec.amplitude * std::sin(angle) + spec.amplitude, 0.0);
  }
  return EnergyProfile(std::move(amounts), spec.node);
}

EnergyProfile constant_profile(double level, std::size_t n_blocks, Node node) {
  return EnergyProfile(std::vector<double>(n_blocks, level), node);
}

ProfileDocument load_profile_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("profile: ") + e.what(), line_at(text, e.byte));
  }
  if (!doc.is_object()) throw ParseError("profile: document must be an object", 1);

  Node node = Node::kSource;
  if (!doc.contains("node") || !doc["node"].is_string()) {
    throw ParseError("profile: missing string field \"node\"", 0);
  }
  const std::string label = doc["node"].get<std::string>();
  if (label == "relay") node = Node::kRelay;
  else if (label != "source") throw ParseError("profile: unknown node \"" + label + "\"", 0);

  if (!doc.contains("amounts") || !doc["amounts"].is_array()) {
    throw ParseError("profile: missing array field \"amounts\"", 0);
  }
  std::vector<double> amounts;
  const json& arr = doc["amounts"];
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (!arr[k].is_number()) {
      throw ParseError("profile: amount at index " + std::to_string(k + 1) + " is not a number",
                       amount_line(text, k));
    }
    const double v = arr[k].get<double>();
    if (!std::isfinite(v) || v < 0.0) {
      throw ParseError("profile: amount at index " + std::to_string(k + 1) +
                           " must be finite and non-negative",
                       amount_line(text, k));
    }
    amounts.push_back(v);
  }

  ProfileDocument out{EnergyProfile(std::move(amounts), node), std::nullopt};
  if (doc.contains("B")) {
    if (!doc["B"].is_number() || !(doc["B"].get<double>() > 0.0)) {
      throw ParseError("profile: \"B\" must be a positive number", 0);
    }
    out.block_len = doc["B"].get<double>();
  }
  return out;
}

EnergyProfile load_profile(std::string_view text) { return load_profile_document(text).profile; }

std::string save_profile(const EnergyProfile& profile, std::optional<double> block_len) {
  std::string out = "{\n  \"node\": \"" + std::string(to_string(profile.node())) + "\",\n";
  if (block_len) out += "  \"B\": " + format_double(*block_len) + ",\n";
  out += "  \"amounts\": [";
  for (std::size_t k = 0; k < profile.size(); ++k) {
    out += (k ? ",\n    " : "\n    ") + format_double(profile[k]);
  }
  out += profile.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

}  // namespace ehrelay
