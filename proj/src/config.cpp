#include "helixwake/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace helixwake {

ConfigError::ConfigError(std::string field, int line, const std::string& message)
    : std::runtime_error(field + (line > 0 ? " (line " + std::to_string(line) + ")" : std::string{}) +
                         ": " + message),
      field_(std::move(field)),
      line_(line) {}

namespace {

int line_of(const YAML::Node& n) { return n.Mark().line >= 0 ? n.Mark().line + 1 : 0; }

enum class Bound { Any, Positive, NonNegative };

/// One mapping node of the config. Reads typed fields and rejects keys it
/// never read, so typos surface as errors instead of silent defaults.
class Section {
 public:
  Section(const YAML::Node& node, std::string path) : node_(node), path_(std::move(path)) {
    if (present() && !node_.IsMap()) throw ConfigError(path_, line_of(node_), "expected a mapping");
  }

  bool present() const { return node_.IsDefined() && !node_.IsNull(); }

  std::string field(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

  YAML::Node child(const char* key) {
    seen_.insert(key);
    return present() ? node_[key] : YAML::Node{};
  }

  void get(const char* key, double& out, Bound bound = Bound::Any) {
    const YAML::Node n = child(key);
    if (!n || n.IsNull()) return;
    double v = 0.0;
    try {
      v = n.as<double>();
    } catch (const YAML::Exception&) {
      throw ConfigError(field(key), line_of(n), "expected a number");
    }
    if (!std::isfinite(v)) throw ConfigError(field(key), line_of(n), "must be finite");
    if (bound == Bound::Positive && !(v > 0.0)) throw ConfigError(field(key), line_of(n), "must be positive");
    if (bound == Bound::NonNegative && v < 0.0) throw ConfigError(field(key), line_of(n), "must be non-negative");
    out = v;
  }

  void get(const char* key, int& out, int min_value) {
    const YAML::Node n = child(key);
    if (!n || n.IsNull()) return;
    int v = 0;
    try {
      v = n.as<int>();
    } catch (const YAML::Exception&) {
      throw ConfigError(field(key), line_of(n), "expected an integer");
    }
    if (v < min_value) throw ConfigError(field(key), line_of(n), "must be at least " + std::to_string(min_value));
    out = v;
  }

  void get(const char* key, bool& out) {
    const YAML::Node n = child(key);
    if (!n || n.IsNull()) return;
    try {
      out = n.as<bool>();
    } catch (const YAML::Exception&) {
      throw ConfigError(field(key), line_of(n), "expected true or false");
    }
  }

  void get(const char* key, std::string& out) {
    const YAML::Node n = child(key);
    if (!n || n.IsNull()) return;
    if (!n.IsScalar()) throw ConfigError(field(key), line_of(n), "expected a string");
    out = n.as<std::string>();
  }

  void get(const char* key, std::uint64_t& out) {
    const YAML::Node n = child(key);
    if (!n || n.IsNull()) return;
    try {
      out = n.as<std::uint64_t>();
    } catch (const YAML::Exception&) {
      throw ConfigError(field(key), line_of(n), "expected a non-negative integer");
    }
  }

  void finish() const {
    if (!present()) return;
    for (const auto& kv : node_) {
      const auto key = kv.first.as<std::string>();
      if (!seen_.count(key)) throw ConfigError(field(key.c_str()), line_of(kv.first), "unknown key");
    }
  }

 private:
  YAML::Node node_;
  std::string path_;
  std::set<std::string> seen_;
};

StrategyKind strategy_from(const YAML::Node& n, const std::string& field) {
  const auto token = n.IsScalar() ? n.as<std::string>() : std::string{};
  const auto kind = parse_strategy(token);
  if (!kind) throw ConfigError(field, line_of(n), "unknown strategy '" + token + "'");
  return *kind;
}

YAML::Node load_text(const std::string& text) {
  try {
    return YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError("<document>", e.mark.line + 1, e.msg);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("<file>", 0, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Struct-level validate() as a last line of defence for cross-field rules.
void check(const char* section, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(section, 0, e.what());
  }
}

}  // namespace

void RunConfig::validate() const {
  const auto& s = scenario;
  check("turbine", [&] { s.turbine.validate(); });
  check("flow", [&] { s.flow.validate(); });
  check("wake", [&] { s.wake.validate(); });
  check("grid", [&] { s.grid.validate(s.flow.wind_speed); });
  check("excitation", [&] { s.strategy.validate(); });
  if (strategies.empty()) throw ConfigError("strategies", 0, "at least one strategy is required");
  if (output_dir.empty()) throw ConfigError("output.dir", 0, "must not be empty");
  if (s.grid.cross_y < s.turbine.diameter || s.grid.cross_z < s.turbine.diameter) {
    throw ConfigError("grid", 0, "cross-section must cover the rotor disk");
  }
  ScenarioConfig probe = s;
  const auto timing = scenario_timing(probe);
  if (s.dt > max_turbine_dt(timing.rotor_frequency, timing.excitation_frequency)) {
    throw ConfigError("simulation.dt", 0, "exceeds the pitch sampling bound (1/20)/(f_r+f_e)");
  }
  if (s.duration > 0.0) {
    const double needed = timing.spin_up + 10.0 / timing.excitation_frequency;
    if (s.duration < needed) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "must be at least spin-up + 10 excitation periods (%.1f s)", needed);
      throw ConfigError("simulation.duration", 0, buf);
    }
  }
  if (s.average_periods < 10.0) throw ConfigError("simulation.average_periods", 0, "must be at least 10");
}

RunConfig parse_run_config(const std::string& yaml_text) {
  const YAML::Node root = load_text(yaml_text);
  if (root && !root.IsNull() && !root.IsMap()) throw ConfigError("<document>", line_of(root), "expected a mapping");
  Section top(root, "");
  RunConfig cfg;
  auto& s = cfg.scenario;

  Section turbine(top.child("turbine"), "turbine");
  turbine.get("diameter", s.turbine.diameter, Bound::Positive);
  turbine.get("hub_height", s.turbine.hub_height, Bound::Positive);
  turbine.get("rated_rotor_speed_rpm", s.turbine.rated_rotor_speed_rpm, Bound::Positive);
  turbine.get("rated_wind_speed", s.turbine.rated_wind_speed, Bound::Positive);
  turbine.get("below_rated_tsr", s.turbine.below_rated_tsr, Bound::Positive);
  turbine.get("baseline_ct", s.turbine.baseline_ct, Bound::NonNegative);
  turbine.get("baseline_cp", s.turbine.baseline_cp, Bound::Positive);
  turbine.get("pitch_thrust_gain", s.turbine.pitch_thrust_gain, Bound::NonNegative);
  turbine.get("pitch_power_gain", s.turbine.pitch_power_gain);
  turbine.get("pitch_power_curvature", s.turbine.pitch_power_curvature, Bound::NonNegative);
  turbine.get("moment_arm_fraction", s.turbine.moment_arm_fraction, Bound::Positive);
  turbine.get("max_pitch_deg", s.turbine.max_pitch_deg, Bound::Positive);
  turbine.finish();

  Section flow(top.child("flow"), "flow");
  flow.get("wind_speed", s.flow.wind_speed, Bound::Positive);
  flow.get("turbulence_intensity", s.flow.turbulence_intensity, Bound::NonNegative);
  flow.get("air_density", s.flow.air_density, Bound::Positive);
  flow.finish();

  Section sim(top.child("simulation"), "simulation");
  sim.get("dt", s.dt, Bound::Positive);
  sim.get("duration", s.duration, Bound::NonNegative);
  sim.get("rotor_speed", s.rotor_speed);
  sim.get("settle_periods", s.settle_periods, Bound::NonNegative);
  sim.get("average_periods", s.average_periods, Bound::Positive);
  std::string flux = "cubic";
  sim.get("flux", flux);
  if (flux == "cubic") {
    s.flux = FluxKind::Cubic;
  } else if (flux == "quadratic") {
    s.flux = FluxKind::Quadratic;
  } else {
    throw ConfigError("simulation.flux", line_of(root["simulation"]["flux"]), "expected cubic or quadratic");
  }
  sim.finish();

  s.grid = WakeGridConfig::for_diameter(s.turbine.diameter, s.dt);
  Section grid(top.child("grid"), "grid");
  grid.get("x_extent", s.grid.x_extent, Bound::Positive);
  grid.get("cross_y", s.grid.cross_y, Bound::Positive);
  grid.get("cross_z", s.grid.cross_z, Bound::Positive);
  grid.get("nx", s.grid.nx, 16);
  grid.get("ny", s.grid.ny, 16);
  grid.get("nz", s.grid.nz, 16);
  grid.finish();

  Section wake(top.child("wake"), "wake");
  wake.get("deflection_gain", s.wake.deflection_gain, Bound::NonNegative);
  wake.get("recovery_base", s.wake.recovery_base, Bound::NonNegative);
  wake.get("recovery_ti", s.wake.recovery_ti, Bound::NonNegative);
  wake.get("expansion_base", s.wake.expansion_base, Bound::NonNegative);
  wake.get("expansion_ti", s.wake.expansion_ti, Bound::NonNegative);
  wake.get("mixing_gain", s.wake.mixing_gain, Bound::NonNegative);
  wake.get("vertical_mixing_weight", s.wake.vertical_mixing_weight, Bound::NonNegative);
  wake.get("axial_mixing_weight", s.wake.axial_mixing_weight, Bound::NonNegative);
  wake.get("spreading_conserves_deficit", s.wake.spreading_conserves_deficit);
  wake.finish();

  Section exc(top.child("excitation"), "excitation");
  exc.get("strouhal", s.strategy.excitation.strouhal, Bound::Positive);
  exc.get("amplitude", s.strategy.excitation.amplitude_deg, Bound::NonNegative);
  exc.get("phase_offset", s.strategy.excitation.phase_offset);
  exc.get("ramp_time", s.strategy.excitation.ramp_time, Bound::NonNegative);
  exc.get("derate_pitch_offset", s.strategy.derate_pitch_offset_deg);
  exc.get("azimuth_offset", s.strategy.azimuth_offset);
  exc.finish();

  if (const YAML::Node list = top.child("strategies"); list && !list.IsNull()) {
    if (!list.IsSequence()) throw ConfigError("strategies", line_of(list), "expected a list");
    cfg.strategies.clear();
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto kind = strategy_from(list[i], "strategies[" + std::to_string(i) + "]");
      if (std::find(cfg.strategies.begin(), cfg.strategies.end(), kind) == cfg.strategies.end()) {
        cfg.strategies.push_back(kind);
      }
    }
  }

  Section output(top.child("output"), "output");
  output.get("dir", cfg.output_dir);
  output.finish();

  top.get("seed", cfg.seed);
  top.finish();

  cfg.validate();
  return cfg;
}

RunConfig load_run_config(const std::string& path) { return parse_run_config(read_file(path)); }

SweepSpec parse_sweep_spec(const std::string& yaml_text) {
  const YAML::Node root = load_text(yaml_text);
  Section top(root, "");
  Section sw(top.child("sweep"), "sweep");
  if (!sw.present()) throw ConfigError("sweep", 0, "missing sweep section");
  SweepSpec spec;

  if (const YAML::Node k = sw.child("strategy"); k && !k.IsNull()) spec.kind = strategy_from(k, "sweep.strategy");
  Section st(sw.child("strouhal"), "sweep.strouhal");
  st.get("min", spec.st_min);
  st.get("max", spec.st_max);
  st.get("count", spec.st_count, 1);
  st.finish();
  Section amp(sw.child("amplitude"), "sweep.amplitude");
  amp.get("min", spec.amp_min);
  amp.get("max", spec.amp_max);
  amp.get("count", spec.amp_count, 1);
  amp.finish();

  std::string objective{to_string(spec.objective)};
  sw.get("objective", objective);
  const auto obj = parse_objective(objective);
  if (!obj) throw ConfigError("sweep.objective", line_of(root["sweep"]["objective"]), "unknown objective '" + objective + "'");
  spec.objective = *obj;
  sw.get("penalty_weight", spec.penalty_weight);
  sw.get("settle_periods", spec.settle_periods);
  sw.get("average_periods", spec.average_periods);
  sw.finish();
  top.finish();

  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("sweep", 0, e.what());
  }
  return spec;
}

SweepSpec load_sweep_spec(const std::string& path) { return parse_sweep_spec(read_file(path)); }

std::string canonical_config(const RunConfig& cfg) {
  const auto& s = cfg.scenario;
  std::string out;
  char buf[160];
  auto put = [&](const char* key, double v) {
    std::snprintf(buf, sizeof buf, "%s=%.17g\n", key, v);
    out += buf;
  };
  put("turbine.diameter", s.turbine.diameter);
  put("turbine.hub_height", s.turbine.hub_height);
  put("turbine.rated_rotor_speed_rpm", s.turbine.rated_rotor_speed_rpm);
  put("turbine.rated_wind_speed", s.turbine.rated_wind_speed);
  put("turbine.below_rated_tsr", s.turbine.below_rated_tsr);
  put("turbine.baseline_ct", s.turbine.baseline_ct);
  put("turbine.baseline_cp", s.turbine.baseline_cp);
  put("turbine.pitch_thrust_gain", s.turbine.pitch_thrust_gain);
  put("turbine.pitch_power_gain", s.turbine.pitch_power_gain);
  put("turbine.pitch_power_curvature", s.turbine.pitch_power_curvature);
  put("turbine.moment_arm_fraction", s.turbine.moment_arm_fraction);
  put("turbine.max_pitch_deg", s.turbine.max_pitch_deg);
  put("flow.wind_speed", s.flow.wind_speed);
  put("flow.turbulence_intensity", s.flow.turbulence_intensity);
  put("flow.air_density", s.flow.air_density);
  put("grid.x_extent", s.grid.x_extent);
  put("grid.cross_y", s.grid.cross_y);
  put("grid.cross_z", s.grid.cross_z);
  put("grid.nx", s.grid.nx);
  put("grid.ny", s.grid.ny);
  put("grid.nz", s.grid.nz);
  put("wake.deflection_gain", s.wake.deflection_gain);
  put("wake.recovery_base", s.wake.recovery_base);
  put("wake.recovery_ti", s.wake.recovery_ti);
  put("wake.expansion_base", s.wake.expansion_base);
  put("wake.expansion_ti", s.wake.expansion_ti);
  put("wake.mixing_gain", s.wake.mixing_gain);
  put("wake.vertical_mixing_weight", s.wake.vertical_mixing_weight);
  put("wake.axial_mixing_weight", s.wake.axial_mixing_weight);
  put("wake.spreading_conserves_deficit", s.wake.spreading_conserves_deficit ? 1 : 0);
  put("excitation.strouhal", s.strategy.excitation.strouhal);
  put("excitation.amplitude", s.strategy.excitation.amplitude_deg);
  put("excitation.phase_offset", s.strategy.excitation.phase_offset);
  put("excitation.ramp_time", s.strategy.excitation.ramp_time);
  put("excitation.derate_pitch_offset", s.strategy.derate_pitch_offset_deg);
  put("excitation.azimuth_offset", s.strategy.azimuth_offset);
  put("simulation.dt", s.dt);
  put("simulation.duration", s.duration);
  put("simulation.rotor_speed", s.rotor_speed);
  put("simulation.settle_periods", s.settle_periods);
  put("simulation.average_periods", s.average_periods);
  out += s.flux == FluxKind::Cubic ? "simulation.flux=cubic\n" : "simulation.flux=quadratic\n";
  out += "strategies=";
  for (std::size_t i = 0; i < cfg.strategies.size(); ++i) {
    out += (i ? "," : "") + std::string(to_string(cfg.strategies[i]));
  }
  out += "\nseed=" + std::to_string(cfg.seed) + "\n";
  return out;
}

std::uint64_t config_hash(const RunConfig& cfg) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical_config(cfg)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string config_hash_hex(const RunConfig& cfg) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, config_hash(cfg));
  return buf;
}

}  // namespace helixwake
