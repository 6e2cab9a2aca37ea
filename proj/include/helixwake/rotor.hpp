#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "helixwake/excitation.hpp"
#include "helixwake/mbc.hpp"

namespace helixwake {

/// Raised when a rotor input leaves the range the linearized aerodynamics
/// were calibrated for.
class ModelValidityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// NREL 5MW reference turbine, linearized about the below-rated greedy
/// operating point. Pitch gains are fractional change per degree.
struct TurbineParams {
  double diameter = 126.4;             // m
  double hub_height = 90.0;            // m
  double rated_rotor_speed_rpm = 12.1;
  double rated_wind_speed = 11.4;      // m/s
  double below_rated_tsr = 7.55;
  double baseline_ct = 0.77;
  double baseline_cp = 0.47;
  double pitch_thrust_gain = 0.03689;     // 1/deg
  double pitch_power_gain = 0.0;          // 1/deg, dCp/dtheta / Cp; zero at the Cp optimum
  double pitch_power_curvature = 0.00736; // 1/deg^2
  double moment_arm_fraction = 0.75;
  double max_pitch_deg = 30.0;

  void validate() const;

  double radius() const { return 0.5 * diameter; }
  double area() const;
};

/// Below-rated schedule min(tsr U / R, rated), in rad/s.
double rotor_speed_for_wind(const TurbineParams& params, const FlowConditions& flow);

struct BladeLoads {
  ForceTriple axial_force;
  MomentTriple root_moment;  // flapwise
};

/// Per-blade quasi-steady loads. Throws ModelValidityError when a pitch
/// magnitude exceeds params.max_pitch_deg.
BladeLoads blade_loads(const TurbineParams& params, const FlowConditions& flow,
                       const PitchTriple& pitch, const AzimuthState& az);

struct RotorAggregate {
  double thrust = 0.0;              // N
  double collective_moment = 0.0;   // N m
  double tilt_moment = 0.0;         // N m
  double yaw_moment = 0.0;          // N m
  double power = 0.0;               // W
};

RotorAggregate aggregate(const TurbineParams& params, const FlowConditions& flow,
                         const BladeLoads& loads, const PitchTriple& pitch,
                         const AzimuthState& az);

struct TurbineSample {
  double t = 0.0;
  double psi = 0.0;
  PitchTriple pitch;
  ForceTriple force;
  MomentTriple moment;
  double thrust = 0.0;
  double tilt_moment = 0.0;
  double yaw_moment = 0.0;
  double power = 0.0;
};

struct TurbineTimeSeries {
  double dt = 0.0;
  std::vector<TurbineSample> samples;

  std::size_t size() const { return samples.size(); }
  /// Throws std::logic_error if time is not strictly increasing and uniform
  /// or a sample is non-finite.
  void check_invariants() const;
};

/// Fixed column order: t, psi, theta1..3, F1..3, M1..3, thrust, Mtilt, Myaw, power.
void write_turbine_csv(std::ostream& os, const TurbineTimeSeries& series,
                       const std::string& header_comment = {});

/// Steps the rotor one sample at a time; simulate_turbine and the coupled
/// wake run share it.
class TurbineSimulator {
 public:
  TurbineSimulator(StrategyConfig cfg, TurbineParams params, FlowConditions flow, double dt,
                   double rotor_speed);

  /// Loads at the current time; does not advance.
  TurbineSample sample() const;
  void advance();

  double time() const { return static_cast<double>(step_) * dt_; }
  double rotor_speed() const { return rotor_speed_; }
  double dt() const { return dt_; }

 private:
  StrategyConfig cfg_;
  TurbineParams params_;
  FlowConditions flow_;
  double dt_;
  double rotor_speed_;
  long step_ = 0;
  AzimuthState az_{};
};

/// Largest admissible dt: one twentieth of the fastest expected pitch period.
double max_turbine_dt(double f_r, double f_e);

/// Open-loop run of one strategy. rotor_speed < 0 selects the schedule value.
/// Rejects dt above max_turbine_dt and durations shorter than three
/// excitation periods.
TurbineTimeSeries simulate_turbine(const StrategyConfig& cfg, const TurbineParams& params,
                                   const FlowConditions& flow, double duration, double dt,
                                   double rotor_speed = -1.0);

}  // namespace helixwake
