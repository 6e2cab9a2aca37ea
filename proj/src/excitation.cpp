#include "helixwake/excitation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace helixwake {

namespace {

struct StrategyName {
  StrategyKind kind;
  std::string_view token;
  std::string_view label;
};

constexpr std::array kNames{
    StrategyName{StrategyKind::Baseline, "baseline", "Baseline"},
    StrategyName{StrategyKind::YawDIPC, "yaw-dipc", "Yaw DIPC"},
    StrategyName{StrategyKind::TiltDIPC, "tilt-dipc", "Tilt DIPC"},
    StrategyName{StrategyKind::HelixCCW, "helix-ccw", "CCW Helix"},
    StrategyName{StrategyKind::HelixCW, "helix-cw", "CW Helix"},
    StrategyName{StrategyKind::DIC, "dic", "DIC"},
    StrategyName{StrategyKind::SIC, "sic", "SIC"},
};

const StrategyName& lookup(StrategyKind kind) {
  for (const auto& n : kNames) {
    if (n.kind == kind) return n;
  }
  throw std::logic_error("unknown strategy kind");
}

}  // namespace

std::string_view to_string(StrategyKind kind) { return lookup(kind).token; }
std::string_view display_name(StrategyKind kind) { return lookup(kind).label; }

std::optional<StrategyKind> parse_strategy(std::string_view token) {
  for (const auto& n : kNames) {
    if (n.token == token) return n.kind;
  }
  // short aliases
  if (token == "yaw") return StrategyKind::YawDIPC;
  if (token == "tilt") return StrategyKind::TiltDIPC;
  if (token == "helix") return StrategyKind::HelixCCW;
  return std::nullopt;
}

bool is_dipc(StrategyKind kind) {
  return kind == StrategyKind::YawDIPC || kind == StrategyKind::TiltDIPC ||
         kind == StrategyKind::HelixCCW || kind == StrategyKind::HelixCW;
}

void ExcitationParams::validate() const {
  if (!(strouhal > 0.0) || !std::isfinite(strouhal)) {
    throw std::invalid_argument("excitation strouhal must be positive");
  }
  if (!(amplitude_deg >= 0.0) || !std::isfinite(amplitude_deg)) {
    throw std::invalid_argument("excitation amplitude must be >= 0");
  }
  if (!std::isfinite(phase_offset)) throw std::invalid_argument("excitation phase must be finite");
  if (!(ramp_time >= 0.0)) throw std::invalid_argument("excitation ramp time must be >= 0");
}

void StrategyConfig::validate() const {
  excitation.validate();
  if (!(derate_pitch_offset_deg >= 0.0) || !std::isfinite(derate_pitch_offset_deg)) {
    throw std::invalid_argument("derate pitch offset must be >= 0");
  }
  if (!std::isfinite(azimuth_offset)) throw std::invalid_argument("azimuth offset must be finite");
}

void FlowConditions::validate() const {
  if (!(wind_speed > 0.0) || !std::isfinite(wind_speed)) {
    throw std::invalid_argument("wind speed must be positive");
  }
  if (!(turbulence_intensity >= 0.0) || !std::isfinite(turbulence_intensity)) {
    throw std::invalid_argument("turbulence intensity must be >= 0");
  }
  if (!(air_density > 0.0) || !std::isfinite(air_density)) {
    throw std::invalid_argument("air density must be positive");
  }
}

double excitation_frequency(double strouhal, const FlowConditions& flow, double diameter) {
  if (!(strouhal > 0.0) || !(flow.wind_speed > 0.0) || !(diameter > 0.0)) {
    throw std::invalid_argument("excitation_frequency: St, U and D must be positive");
  }
  return strouhal * flow.wind_speed / diameter;
}

FixedPitch fixed_frame_reference(const StrategyConfig& cfg, const FlowConditions& flow,
                                 double diameter, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("fixed_frame_reference: t must be >= 0");
  switch (cfg.kind) {
    case StrategyKind::Baseline:
      return {};
    case StrategyKind::SIC:
      return {cfg.derate_pitch_offset_deg, 0.0, 0.0};
    default:
      break;
  }

  const auto& ex = cfg.excitation;
  const double fe = excitation_frequency(ex.strouhal, flow, diameter);
  double amp = ex.amplitude_deg;
  if (ex.ramp_time > 0.0) amp *= std::min(1.0, t / ex.ramp_time);
  const double phase = kTwoPi * fe * t + ex.phase_offset;
  const double s = amp * std::sin(phase);
  const double c = amp * std::cos(phase);

  switch (cfg.kind) {
    case StrategyKind::DIC:
      return {s, 0.0, 0.0};
    case StrategyKind::TiltDIPC:
      return {0.0, s, 0.0};
    case StrategyKind::YawDIPC:
      return {0.0, 0.0, s};
    case StrategyKind::HelixCCW:
      return {0.0, s, c};
    case StrategyKind::HelixCW:
      return {0.0, s, -c};
    default:
      return {};
  }
}

PitchTriple blade_pitch_command(const StrategyConfig& cfg, const FlowConditions& flow,
                                double diameter, const AzimuthState& az, double t) {
  const auto ref = fixed_frame_reference(cfg, flow, diameter, t);
  return inverse_mbc(az.shifted(cfg.azimuth_offset), ref);
}

std::vector<double> predicted_pitch_frequencies(StrategyKind kind, double f_r, double f_e) {
  if (!(f_e >= 0.0) || !(f_r > f_e)) {
    throw std::invalid_argument("predicted_pitch_frequencies: requires f_r > f_e >= 0");
  }
  switch (kind) {
    case StrategyKind::HelixCCW:
      return {f_r + f_e};
    case StrategyKind::HelixCW:
      return {f_r - f_e};
    case StrategyKind::TiltDIPC:
    case StrategyKind::YawDIPC:
      return {f_r - f_e, f_r + f_e};
    case StrategyKind::DIC:
      return {f_e};
    case StrategyKind::Baseline:
    case StrategyKind::SIC:
      return {};
  }
  return {};
}

}  // namespace helixwake
