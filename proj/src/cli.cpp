#include "helixwake/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>

#include "helixwake/config.hpp"
#include "helixwake/parallel.hpp"
#include "helixwake/report.hpp"
#include "helixwake/slice_io.hpp"
#include "helixwake/sweep.hpp"

namespace helixwake {

namespace {

namespace fs = std::filesystem;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonArgs {
  std::string config;
  std::string out;
  std::optional<double> duration;
  std::optional<double> dt;
};

RunConfig load_with_overrides(const CommonArgs& args) {
  RunConfig cfg = load_run_config(args.config);
  if (args.duration) cfg.scenario.duration = *args.duration;
  if (args.dt) cfg.scenario.dt = *args.dt;
  if (!args.out.empty()) cfg.output_dir = args.out;
  if (args.duration && !(*args.duration >= 0.0)) throw ConfigError("--duration", 0, "must be non-negative");
  if (args.dt && !(*args.dt > 0.0)) throw ConfigError("--dt", 0, "must be positive");
  cfg.validate();
  return cfg;
}

StrategyKind strategy_arg(const std::string& token) {
  const auto kind = parse_strategy(token);
  if (!kind) throw ConfigError("--strategy", 0, "unknown strategy '" + token + "'");
  return *kind;
}

std::string provenance(const RunConfig& cfg, const std::string& what) {
  return "# helixwake " + what + "\n# config_hash=" + config_hash_hex(cfg) + "\n";
}

fs::path prepare_dir(const RunConfig& cfg) {
  const fs::path dir(cfg.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());
  return dir;
}

std::mutex write_mutex;

template <class Fn>
void write_file(const fs::path& path, Fn&& body, bool binary = false) {
  std::lock_guard lock(write_mutex);
  std::ofstream os(path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  body(os);
  os.flush();
  if (!os) throw IoError("write failed: " + path.string());
}

std::string plane_tag(double x_over_d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "x%gD", x_over_d);
  return buf;
}

ScenarioConfig scenario_for(const RunConfig& cfg, StrategyKind kind) {
  ScenarioConfig s = cfg.scenario;
  s.strategy.kind = kind;
  return s;
}

int cmd_run(const CommonArgs& args, const std::string& strategy, bool time_mean, std::ostream& out) {
  const RunConfig cfg = load_with_overrides(args);
  const StrategyKind kind = strategy_arg(strategy);
  RunOptions opts;
  opts.time_mean_slices = time_mean;
  const RunResult run = run_scenario(scenario_for(cfg, kind), opts);

  const auto dir = prepare_dir(cfg);
  const std::string name(to_string(kind));
  const std::string header = provenance(cfg, "run strategy=" + name);
  write_file(dir / (name + "_turbine.csv"), [&](std::ostream& os) { write_turbine_csv(os, run.series, header); });
  const auto& slices = time_mean ? run.mean_slices : run.final_slices;
  for (const auto& s : slices) {
    const std::string stem = name + "_" + plane_tag(s.x_over_d);
    write_file(dir / (stem + ".grid"), [&](std::ostream& os) { write_slice_grid(os, s, header); });
    write_file(dir / (stem + ".csv"), [&](std::ostream& os) { write_slice_csv(os, s, header); });
  }
  out << "wrote " << run.series.samples.size() << " samples and " << slices.size() << " slices to "
      << dir.string() << '\n';
  return kExitOk;
}

int cmd_compare(const CommonArgs& args, const std::vector<std::string>& strategies, std::ostream& out) {
  RunConfig cfg = load_with_overrides(args);
  if (!strategies.empty()) {
    cfg.strategies.clear();
    for (const auto& s : strategies) {
      const auto kind = strategy_arg(s);
      if (std::find(cfg.strategies.begin(), cfg.strategies.end(), kind) == cfg.strategies.end()) {
        cfg.strategies.push_back(kind);
      }
    }
  }
  std::vector<StrategyKind> kinds{StrategyKind::Baseline};
  for (auto k : cfg.strategies) {
    if (k != StrategyKind::Baseline) kinds.push_back(k);
  }

  std::vector<std::optional<RunResult>> results(kinds.size());
  std::vector<std::string> errors(kinds.size());
  parallel_for(kinds.size(), configured_threads(), [&](std::size_t i) {
    try {
      results[i] = run_scenario(scenario_for(cfg, kinds[i]));
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (!errors[i].empty()) throw std::runtime_error(std::string(to_string(kinds[i])) + ": " + errors[i]);
  }
  std::map<StrategyKind, RunResult> runs;
  for (std::size_t i = 0; i < kinds.size(); ++i) runs.emplace(kinds[i], std::move(*results[i]));
  const MetricsReport report = build_report(runs);

  const auto dir = prepare_dir(cfg);
  const std::string header = provenance(cfg, "compare");
  write_file(dir / "report.csv", [&](std::ostream& os) { write_report_csv(os, report, header); });
  const std::string table = format_report_table(report);
  write_file(dir / "report.txt", [&](std::ostream& os) { os << header << table; });
  out << table;
  return kExitOk;
}

int cmd_sweep(const CommonArgs& args, const std::string& spec_path, std::ostream& out) {
  const RunConfig cfg = load_with_overrides(args);
  const SweepSpec spec = load_sweep_spec(spec_path);
  const SweepResult result = run_sweep(spec, cfg.scenario, configured_threads());
  const auto dir = prepare_dir(cfg);
  write_file(dir / "sweep.csv",
             [&](std::ostream& os) { write_sweep_csv(os, spec, result, provenance(cfg, "sweep")); });
  out << "evaluated " << result.ranked.size() + result.failed.size() << " points, " << result.failed.size()
      << " failed\n";
  if (!result.ranked.empty()) {
    const auto& best = result.ranked.front();
    out << "best: St=" << best.strouhal << " A=" << best.amplitude << " objective=" << best.objective << '\n';
  }
  return kExitOk;
}

int cmd_slice(const CommonArgs& args, const std::string& strategy, double x_over_d, bool time_mean,
              bool relative, std::ostream& out) {
  const RunConfig cfg = load_with_overrides(args);
  const StrategyKind kind = strategy_arg(strategy);
  const double x = x_over_d * cfg.scenario.turbine.diameter;
  if (!std::isfinite(x_over_d) || !(x_over_d > 0.0) || x > cfg.scenario.grid.x_extent * (1.0 + 1e-12)) {
    throw ConfigError("--x", 0, "plane must lie inside the wake grid (0, x_extent/D]");
  }
  RunOptions opts;
  opts.time_mean_slices = time_mean;
  opts.slice_planes = {x_over_d};
  auto pick = [&](const RunResult& r) { return time_mean ? r.mean_slices.front() : r.final_slices.front(); };
  SliceField field = pick(run_scenario(scenario_for(cfg, kind), opts));
  const double speed = cfg.scenario.flow.wind_speed;
  double centre = speed;
  if (relative) {
    const SliceField base = pick(run_scenario(scenario_for(cfg, StrategyKind::Baseline), opts));
    field = relative_slice(field, base, speed);
    centre = 0.0;
  }
  double half_range = 0.0;
  for (double v : field.u) half_range = std::max(half_range, std::abs(v - centre));

  const auto dir = prepare_dir(cfg);
  const std::string stem = std::string(to_string(kind)) + "_slice_" + plane_tag(x_over_d) +
                           (time_mean ? "_mean" : "") + (relative ? "_rel" : "");
  const std::string header = provenance(cfg, "slice strategy=" + std::string(to_string(kind)) +
                                                 (time_mean ? " time-mean" : "") + (relative ? " relative" : ""));
  write_file(dir / (stem + ".grid"), [&](std::ostream& os) { write_slice_grid(os, field, header); });
  write_file(dir / (stem + ".csv"), [&](std::ostream& os) { write_slice_csv(os, field, header); });
  write_file(dir / (stem + ".ppm"),
             [&](std::ostream& os) { write_heatmap_ppm(os, field, centre, half_range, header); }, true);
  out << "wrote " << (dir / stem).string() << ".{grid,csv,ppm}\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wake-mixing pitch control simulator", "helixwake"};
  app.require_subcommand(1);

  CommonArgs common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config, "YAML run configuration")->required();
    sub->add_option("--out", common.out, "output directory (overrides output.dir)");
    sub->add_option("--duration", common.duration, "simulated time, s (0 = automatic)");
    sub->add_option("--dt", common.dt, "time step, s");
  };

  std::string strategy;
  std::vector<std::string> strategies;
  std::string spec_path;
  double x_over_d = 5.0;
  bool time_mean = false;
  bool relative = false;

  auto* run = app.add_subcommand("run", "simulate one strategy; write the turbine series and wake slices");
  add_common(run);
  run->add_option("--strategy", strategy, "strategy name")->required();
  run->add_flag("--time-mean", time_mean, "export time-mean instead of final slices");

  auto* compare = app.add_subcommand("compare", "simulate several strategies and tabulate deltas vs baseline");
  add_common(compare);
  compare->add_option("--strategy", strategies, "strategies (default: config list)")->delimiter(',');

  auto* sweep = app.add_subcommand("sweep", "grid search over Strouhal number and amplitude");
  add_common(sweep);
  sweep->add_option("--spec", spec_path, "YAML sweep specification")->required();

  auto* slice_cmd = app.add_subcommand("slice", "export one cross-plane as grid, CSV and heatmap");
  add_common(slice_cmd);
  slice_cmd->add_option("--strategy", strategy, "strategy name")->required();
  slice_cmd->add_option("--x", x_over_d, "downstream distance in rotor diameters");
  slice_cmd->add_flag("--time-mean", time_mean, "average over the statistics window");
  slice_cmd->add_flag("--relative", relative, "subtract the baseline, normalized by U");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  try {
    if (*run) return cmd_run(common, strategy, time_mean, out);
    if (*compare) return cmd_compare(common, strategies, out);
    if (*sweep) return cmd_sweep(common, spec_path, out);
    if (*slice_cmd) return cmd_slice(common, strategy, x_over_d, time_mean, relative, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "simulation error: " << e.what() << '\n';
    return kExitSimulation;
  }
  return kExitConfig;
}

}  // namespace helixwake
