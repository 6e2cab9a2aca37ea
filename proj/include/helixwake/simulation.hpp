#pragma once

#include <array>
#include <optional>
#include <vector>

#include "helixwake/analysis.hpp"
#include "helixwake/excitation.hpp"
#include "helixwake/rotor.hpp"
#include "helixwake/wake.hpp"

namespace helixwake {

/// Everything needed for one coupled turbine + wake run.
struct ScenarioConfig {
  TurbineParams turbine{};
  FlowConditions flow{};
  WakeGridConfig grid{};
  WakeModelParams wake{};
  StrategyConfig strategy{};
  double dt = 0.1;
  double duration = 0.0;        // s; 0 picks spin-up + averaging window
  double rotor_speed = -1.0;    // rad/s; negative uses the below-rated schedule
  double settle_periods = 1.0;  // excitation periods added to the spin-up
  double average_periods = 10.0;
  FluxKind flux = FluxKind::Cubic;
};

struct ScenarioTiming {
  double excitation_frequency = 0.0;  // Hz
  double rotor_frequency = 0.0;       // Hz
  double advection_time = 0.0;        // x_extent / U_adv
  double spin_up = 0.0;               // wake statistics start here
  double duration = 0.0;
};

/// Spin-up is two advection times (forcing reaches the far end, then the
/// mixing it causes does too) plus settle_periods excitation periods.
ScenarioTiming scenario_timing(const ScenarioConfig& cfg);

/// Downstream planes at which the report evaluates streamtube energy.
inline constexpr std::array<double, 3> kEnergyPlanes{3.0, 5.0, 7.0};

struct ProbeSample {
  double t = 0.0;
  double y_c = 0.0;
  double z_c = 0.0;
};

struct RunOptions {
  bool time_mean_slices = false;  // accumulate slices at slice_planes
  std::vector<double> slice_planes{1, 2, 3, 4, 5, 6, 7};
  std::vector<double> probe_x;  // m; centreline recorded every step
  bool keep_final_state = false;
};

struct RunResult {
  StrategyConfig strategy{};
  ScenarioTiming timing{};
  TurbineTimeSeries series;
  /// Time-mean streamtube energy flux at kEnergyPlanes, W.
  std::array<double, kEnergyPlanes.size()> mean_energy{};
  std::vector<SliceField> mean_slices;   // when time_mean_slices
  std::vector<SliceField> final_slices;  // instantaneous at the end, slice_planes
  std::vector<std::vector<ProbeSample>> probes;
  std::optional<WakeState> final_state;
};

/// Deterministic coupled run. The mixing window is set to one excitation
/// period of the configured Strouhal number.
RunResult run_scenario(const ScenarioConfig& cfg, const RunOptions& options = {});

}  // namespace helixwake
