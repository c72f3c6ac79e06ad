#pragma once

#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ehrelay/types.hpp"

namespace ehrelay {

/// Malformed profile or config document. line() is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// E(i) = A sin(2 pi (i - 1) / N + phase) + A for i = 1..N.
struct SinusoidSpec {
  double amplitude = 1.0;
  std::size_t n_blocks = 1;
  double phase = std::numbers::pi / 2;  ///< pi/2 is the source model
  Node node = Node::kSource;
};

EnergyProfile sinusoidal_profile(const SinusoidSpec& spec);

EnergyProfile constant_profile(double level, std::size_t n_blocks, Node node = Node::kSource);

/// A profile document: {"node": "source"|"relay", "B": <real>, "amounts": [...]}.
struct ProfileDocument {
  EnergyProfile profile;
  std::optional<double> block_len;
};

/// Parses a profile document. Throws ParseError for malformed JSON, missing
/// fields, or negative / non-finite amounts (reported with their 1-based
/// index and source line).
ProfileDocument load_profile_document(std::string_view text);
EnergyProfile load_profile(std::string_view text);

/// Serializes with 17 significant digits so load_profile() restores every
/// amount bit-exactly.
std::string save_profile(const EnergyProfile& profile, std::optional<double> block_len = {});

}  // namespace ehrelay
