#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "helixwake/mbc.hpp"

namespace helixwake {

/// Control strategies, in report order.
enum class StrategyKind { Baseline, YawDIPC, TiltDIPC, HelixCCW, HelixCW, DIC, SIC };

inline constexpr std::array kAllStrategies{StrategyKind::Baseline, StrategyKind::YawDIPC,
                                           StrategyKind::TiltDIPC, StrategyKind::HelixCCW,
                                           StrategyKind::HelixCW,  StrategyKind::DIC,
                                           StrategyKind::SIC};

/// CLI/config token, e.g. "helix-ccw".
std::string_view to_string(StrategyKind kind);
/// Column label used in reports, e.g. "CCW Helix".
std::string_view display_name(StrategyKind kind);
std::optional<StrategyKind> parse_strategy(std::string_view token);

/// True for strategies that move the fixed-frame tilt/yaw pitch.
bool is_dipc(StrategyKind kind);

struct ExcitationParams {
  double strouhal = 0.25;
  double amplitude_deg = 2.5;
  double phase_offset = 0.0;  // rad
  double ramp_time = 0.0;     // s, linear amplitude ramp from t = 0

  void validate() const;
};

/// Default collective offset for static derating, sized for a 4% power drop
/// with the default rotor power curvature (see tools/calibrate.cpp).
inline constexpr double kDefaultDeratePitchDeg = 2.3313;

struct StrategyConfig {
  StrategyKind kind = StrategyKind::Baseline;
  ExcitationParams excitation{};
  double derate_pitch_offset_deg = kDefaultDeratePitchDeg;  // SIC only
  double azimuth_offset = 0.0;  // rad, added to psi inside the MBC loop

  void validate() const;
};

struct FlowConditions {
  double wind_speed = 8.0;              // m/s
  double turbulence_intensity = 0.059;  // fraction
  double air_density = 1.225;           // kg/m^3

  void validate() const;
  /// 0.5 * rho * U^2
  double dynamic_pressure() const { return 0.5 * air_density * wind_speed * wind_speed; }
};

/// f_e = St U / D. Throws std::invalid_argument unless every input is positive.
double excitation_frequency(double strouhal, const FlowConditions& flow, double diameter);

/// Fixed-frame pitch reference in degrees at time t.
FixedPitch fixed_frame_reference(const StrategyConfig& cfg, const FlowConditions& flow,
                                 double diameter, double t);

/// Individual blade pitch commands: inverse MBC of the fixed-frame reference.
PitchTriple blade_pitch_command(const StrategyConfig& cfg, const FlowConditions& flow,
                                double diameter, const AzimuthState& az, double t);

/// Frequencies at which blade pitch is expected to oscillate, ascending.
/// Requires f_r > f_e >= 0.
std::vector<double> predicted_pitch_frequencies(StrategyKind kind, double f_r, double f_e);

}  // namespace helixwake
