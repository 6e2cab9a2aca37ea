#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "helixwake/simulation.hpp"
#include "helixwake/sweep.hpp"

namespace helixwake {

/// Parse or validation failure. line is 1-based, 0 when unknown.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, int line, const std::string& message);
  const std::string& field() const { return field_; }
  int line() const { return line_; }

 private:
  std::string field_;
  int line_;
};

struct RunConfig {
  ScenarioConfig scenario{};  // strategy.kind is set per run
  std::vector<StrategyKind> strategies{kAllStrategies.begin(), kAllStrategies.end()};
  std::string output_dir = "out";
  std::uint64_t seed = 0;  // reserved; the model is deterministic

  /// Cross-field checks, including duration >= spin-up + 10 excitation
  /// periods for every listed strategy. Throws ConfigError.
  void validate() const;
};

RunConfig parse_run_config(const std::string& yaml_text);
RunConfig load_run_config(const std::string& path);

SweepSpec parse_sweep_spec(const std::string& yaml_text);
SweepSpec load_sweep_spec(const std::string& path);

/// Every field in fixed order; the hash is FNV-1a 64 over this text.
std::string canonical_config(const RunConfig& cfg);
std::uint64_t config_hash(const RunConfig& cfg);
std::string config_hash_hex(const RunConfig& cfg);

}  // namespace helixwake
