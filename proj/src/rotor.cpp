#include "helixwake/rotor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace helixwake {

void TurbineParams::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  require(diameter > 0.0 && std::isfinite(diameter), "turbine diameter must be positive");
  require(rated_rotor_speed_rpm > 0.0, "rated rotor speed must be positive");
  require(rated_wind_speed > 0.0, "rated wind speed must be positive");
  require(below_rated_tsr > 0.0, "tip-speed ratio must be positive");
  require(baseline_ct >= 0.0 && baseline_ct < 1.0, "baseline_ct must lie in [0, 1)");
  require(baseline_cp > 0.0 && baseline_cp < 16.0 / 27.0, "baseline_cp must lie in (0, 16/27)");
  require(pitch_thrust_gain >= 0.0, "pitch_thrust_gain must be >= 0");
  require(pitch_power_gain >= 0.0, "pitch_power_gain must be >= 0");
  require(pitch_power_curvature >= 0.0, "pitch_power_curvature must be >= 0");
  require(moment_arm_fraction > 0.0 && moment_arm_fraction <= 1.0,
          "moment_arm_fraction must lie in (0, 1]");
  require(max_pitch_deg > 0.0, "max_pitch_deg must be positive");
}

double TurbineParams::area() const { return std::numbers::pi * radius() * radius(); }

double rotor_speed_for_wind(const TurbineParams& params, const FlowConditions& flow) {
  if (!(flow.wind_speed > 0.0)) throw std::invalid_argument("rotor_speed_for_wind: U must be positive");
  const double rated = rpm_to_rad_per_s(params.rated_rotor_speed_rpm);
  if (flow.wind_speed >= params.rated_wind_speed) return rated;
  return std::min(params.below_rated_tsr * flow.wind_speed / params.radius(), rated);
}

BladeLoads blade_loads(const TurbineParams& params, const FlowConditions& flow,
                       const PitchTriple& pitch, const AzimuthState& /*az*/) {
  BladeLoads out;
  const double share = flow.dynamic_pressure() * params.area() * params.baseline_ct / kBladeCount;
  const double arm = params.moment_arm_fraction * params.radius();
  for (int b = 0; b < kBladeCount; ++b) {
    if (!std::isfinite(pitch[b]) || std::abs(pitch[b]) > params.max_pitch_deg) {
      throw ModelValidityError("blade pitch " + std::to_string(pitch[b]) +
                               " deg outside the linearized model range");
    }
    const double f = std::max(0.0, share * (1.0 - params.pitch_thrust_gain * pitch[b]));
    out.axial_force[b] = f;
    out.root_moment[b] = f * arm;
  }
  return out;
}

RotorAggregate aggregate(const TurbineParams& params, const FlowConditions& flow,
                         const BladeLoads& loads, const PitchTriple& pitch,
                         const AzimuthState& az) {
  RotorAggregate agg;
  agg.thrust = loads.axial_force[0] + loads.axial_force[1] + loads.axial_force[2];
  const auto& rm = loads.root_moment;
  agg.collective_moment = (rm[0] + rm[1] + rm[2]) / kBladeCount;
  // project only the blade-to-blade spread so equal loads give exactly zero cyclic moment
  const PitchTriple spread{{rm[0] - agg.collective_moment, rm[1] - agg.collective_moment,
                            rm[2] - agg.collective_moment}};
  const auto m = forward_mbc(az, spread);
  agg.tilt_moment = m.tilt;
  agg.yaw_moment = m.yaw;

  double mean_pitch = 0.0;
  double mean_sq = 0.0;
  for (int b = 0; b < kBladeCount; ++b) {
    mean_pitch += pitch[b];
    mean_sq += pitch[b] * pitch[b];
  }
  mean_pitch /= kBladeCount;
  mean_sq /= kBladeCount;
  const double available =
      flow.dynamic_pressure() * flow.wind_speed * params.area() * params.baseline_cp;
  const double factor =
      1.0 - params.pitch_power_gain * mean_pitch - params.pitch_power_curvature * mean_sq;
  agg.power = std::max(0.0, available * factor);
  return agg;
}

void TurbineTimeSeries::check_invariants() const {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (!s.pitch.finite() || !s.force.finite() || !s.moment.finite() || !std::isfinite(s.thrust) ||
        !std::isfinite(s.power) || !std::isfinite(s.tilt_moment) || !std::isfinite(s.yaw_moment)) {
      throw std::logic_error("turbine series: non-finite sample");
    }
    if (i > 0) {
      const double step = s.t - samples[i - 1].t;
      if (!(step > 0.0) || std::abs(step - dt) > 1e-9 * std::max(1.0, s.t)) {
        throw std::logic_error("turbine series: non-uniform time axis");
      }
    }
  }
}

void write_turbine_csv(std::ostream& os, const TurbineTimeSeries& series,
                       const std::string& header_comment) {
  if (!header_comment.empty()) os << header_comment;
  os << "t,psi,theta1,theta2,theta3,F1,F2,F3,M1,M2,M3,thrust,Mtilt,Myaw,power\n";
  char buf[512];
  for (const auto& s : series.samples) {
    std::snprintf(buf, sizeof buf,
                  "%.4f,%.9f,%.9f,%.9f,%.9f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n",
                  s.t, s.psi, s.pitch[0], s.pitch[1], s.pitch[2], s.force[0], s.force[1],
                  s.force[2], s.moment[0], s.moment[1], s.moment[2], s.thrust, s.tilt_moment,
                  s.yaw_moment, s.power);
    os << buf;
  }
}

TurbineSimulator::TurbineSimulator(StrategyConfig cfg, TurbineParams params, FlowConditions flow,
                                   double dt, double rotor_speed)
    : cfg_(cfg), params_(params), flow_(flow), dt_(dt), rotor_speed_(rotor_speed) {
  cfg_.validate();
  params_.validate();
  flow_.validate();
  if (!(dt_ > 0.0)) throw std::invalid_argument("turbine dt must be positive");
  if (!(rotor_speed_ >= 0.0)) throw std::invalid_argument("rotor speed must be >= 0");
}

TurbineSample TurbineSimulator::sample() const {
  const double t = time();
  TurbineSample s;
  s.t = t;
  s.psi = az_.psi1();
  s.pitch = blade_pitch_command(cfg_, flow_, params_.diameter, az_, t);
  const auto loads = blade_loads(params_, flow_, s.pitch, az_);
  const auto agg = aggregate(params_, flow_, loads, s.pitch, az_);
  s.force = loads.axial_force;
  s.moment = loads.root_moment;
  s.thrust = agg.thrust;
  s.tilt_moment = agg.tilt_moment;
  s.yaw_moment = agg.yaw_moment;
  s.power = agg.power;
  return s;
}

void TurbineSimulator::advance() {
  az_ = azimuth_advance(az_, rotor_speed_, dt_);
  ++step_;
}

double max_turbine_dt(double f_r, double f_e) { return (1.0 / 20.0) / (f_r + f_e); }

TurbineTimeSeries simulate_turbine(const StrategyConfig& cfg, const TurbineParams& params,
                                   const FlowConditions& flow, double duration, double dt,
                                   double rotor_speed) {
  params.validate();
  flow.validate();
  cfg.validate();
  const double omega = rotor_speed < 0.0 ? rotor_speed_for_wind(params, flow) : rotor_speed;
  const double f_r = omega / kTwoPi;
  const double f_e = excitation_frequency(cfg.excitation.strouhal, flow, params.diameter);
  if (!(dt > 0.0) || dt > max_turbine_dt(f_r, f_e) * (1.0 + 1e-12)) {
    throw std::invalid_argument("simulate_turbine: dt violates the sampling bound (1/20)/(f_r+f_e)");
  }
  if (!(duration >= 3.0 / f_e)) {
    throw std::invalid_argument("simulate_turbine: duration must cover at least three excitation periods");
  }

  TurbineSimulator sim(cfg, params, flow, dt, omega);
  const auto n = static_cast<std::size_t>(std::floor(duration / dt + 1e-9));
  TurbineTimeSeries out;
  out.dt = dt;
  out.samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.samples.push_back(sim.sample());
    sim.advance();
  }
  return out;
}

}  // namespace helixwake
