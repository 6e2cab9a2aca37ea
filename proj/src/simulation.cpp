#include "helixwake/simulation.hpp"

#include <cmath>
#include <stdexcept>

namespace helixwake {

ScenarioTiming scenario_timing(const ScenarioConfig& cfg) {
  ScenarioTiming t;
  t.excitation_frequency =
      excitation_frequency(cfg.strategy.excitation.strouhal, cfg.flow, cfg.turbine.diameter);
  const double omega =
      cfg.rotor_speed < 0.0 ? rotor_speed_for_wind(cfg.turbine, cfg.flow) : cfg.rotor_speed;
  t.rotor_frequency = omega / kTwoPi;
  const double u_adv = cfg.flow.wind_speed * (1.0 - axial_induction(cfg.turbine.baseline_ct));
  t.advection_time = cfg.grid.x_extent / u_adv;
  t.spin_up = 2.0 * t.advection_time + cfg.settle_periods / t.excitation_frequency;
  t.duration = cfg.duration > 0.0 ? cfg.duration
                                  : t.spin_up + cfg.average_periods / t.excitation_frequency;
  return t;
}

RunResult run_scenario(const ScenarioConfig& cfg, const RunOptions& options) {
  RunResult out;
  out.strategy = cfg.strategy;
  out.timing = scenario_timing(cfg);
  const auto& timing = out.timing;

  if (!(cfg.dt > 0.0) || cfg.dt > max_turbine_dt(timing.rotor_frequency, timing.excitation_frequency) * (1.0 + 1e-12)) {
    throw std::invalid_argument("dt violates the sampling bound (1/20)/(f_r+f_e)");
  }

  WakeGridConfig grid = cfg.grid;
  grid.dt = cfg.dt;
  WakeModelParams model = cfg.wake;
  model.mixing_window = 1.0 / timing.excitation_frequency;

  TurbineSimulator turbine(cfg.strategy, cfg.turbine, cfg.flow, cfg.dt,
                           timing.rotor_frequency * kTwoPi);
  WakeState wake = init_wake(grid, cfg.turbine, cfg.flow, model);

  const auto n_steps = static_cast<std::size_t>(std::floor(timing.duration / cfg.dt + 1e-9));
  out.series.dt = cfg.dt;
  out.series.samples.reserve(n_steps);
  out.probes.resize(options.probe_x.size());

  // geometry shared by every slice of this grid
  const SliceField probe_geometry = slice(wake, kEnergyPlanes.front());
  const DiskQuadrature disk = DiskQuadrature::for_slice(probe_geometry, cfg.turbine.diameter);

  std::array<double, kEnergyPlanes.size()> energy_sum{};
  std::vector<SliceField> slice_sum;
  std::size_t n_avg = 0;

  for (std::size_t step = 0; step < n_steps; ++step) {
    const TurbineSample sample = turbine.sample();
    out.series.samples.push_back(sample);
    step_wake(wake, sample, cfg.dt);
    turbine.advance();

    for (std::size_t p = 0; p < options.probe_x.size(); ++p) {
      const auto [y, z] = centerline(wake, options.probe_x[p]);
      out.probes[p].push_back({wake.time(), y, z});
    }

    if (wake.time() < timing.spin_up) continue;
    ++n_avg;
    for (std::size_t e = 0; e < kEnergyPlanes.size(); ++e) {
      energy_sum[e] += streamtube_energy(slice(wake, kEnergyPlanes[e]), disk, cfg.flow, cfg.flux);
    }
    if (options.time_mean_slices) {
      if (slice_sum.empty()) {
        for (double xd : options.slice_planes) {
          slice_sum.push_back(slice(wake, xd));
        }
      } else {
        for (std::size_t s = 0; s < options.slice_planes.size(); ++s) {
          const auto inst = slice(wake, options.slice_planes[s]);
          for (std::size_t i = 0; i < inst.u.size(); ++i) slice_sum[s].u[i] += inst.u[i];
        }
      }
    }
  }
  if (n_avg == 0) throw std::invalid_argument("run duration does not reach past the wake spin-up");

  for (std::size_t e = 0; e < kEnergyPlanes.size(); ++e) {
    out.mean_energy[e] = energy_sum[e] / static_cast<double>(n_avg);
  }
  if (options.time_mean_slices) {
    for (auto& s : slice_sum) {
      for (auto& v : s.u) v /= static_cast<double>(n_avg);
    }
    out.mean_slices = std::move(slice_sum);
  }
  for (double xd : options.slice_planes) out.final_slices.push_back(slice(wake, xd));
  if (options.keep_final_state) out.final_state = std::move(wake);
  return out;
}

}  // namespace helixwake
