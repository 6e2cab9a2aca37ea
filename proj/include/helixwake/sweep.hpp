#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "helixwake/simulation.hpp"

namespace helixwake {

enum class SweepObjective { Energy3D, Energy5D, Energy7D, EnergyMinusPowerLoss };

std::string_view to_string(SweepObjective objective);
std::optional<SweepObjective> parse_objective(std::string_view token);

/// Exhaustive grid over Strouhal number and excitation amplitude. A grid
/// with count 1 uses its min value.
struct SweepSpec {
  StrategyKind kind = StrategyKind::HelixCCW;
  double st_min = 0.05;
  double st_max = 0.6;
  int st_count = 12;
  double amp_min = 2.5;
  double amp_max = 2.5;
  int amp_count = 1;
  SweepObjective objective = SweepObjective::Energy5D;
  double penalty_weight = 0.0;  // lambda, for EnergyMinusPowerLoss (energy at 5D)
  double settle_periods = 1.0;
  double average_periods = 10.0;

  /// Throws std::invalid_argument: counts < 1, min > max, min == max with
  /// count > 1, negative lambda, non-positive St or negative amplitude.
  void validate() const;
  std::vector<double> st_values() const;
  std::vector<double> amplitude_values() const;
};

struct SweepPoint {
  double strouhal = 0.0;
  double amplitude = 0.0;
  double objective = 0.0;
  double power_delta_pct = 0.0;
  double energy_delta_pct = 0.0;  // at the objective plane (5D for the penalized form)
  bool ok = true;
  std::string error;
};

struct SweepResult {
  std::vector<SweepPoint> ranked;  // successful points, best first
  std::vector<SweepPoint> failed;  // grid order
};

/// Runs every grid point against one shared baseline. Ranking: objective
/// descending, then lower amplitude, then lower St. Failed points are
/// collected, not rethrown.
SweepResult run_sweep(const SweepSpec& spec, const ScenarioConfig& base, unsigned threads = 1);

/// Objective and deltas of one strategy run against a baseline run.
SweepPoint evaluate_point(const SweepSpec& spec, const RunResult& run, const RunResult& baseline);

/// CSV with the spec echoed as '#' comments above the header row.
void write_sweep_csv(std::ostream& os, const SweepSpec& spec, const SweepResult& result,
                     const std::string& header_comment = {});

}  // namespace helixwake
