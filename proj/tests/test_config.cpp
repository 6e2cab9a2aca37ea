#include <gtest/gtest.h>

#include <sstream>

#include "helixwake/config.hpp"
#include "helixwake/slice_io.hpp"

using namespace helixwake;

namespace {

void expect_config_error(const std::string& yaml, const std::string& field, int line = -1) {
  try {
    parse_run_config(yaml);
    ADD_FAILURE() << "accepted: " << yaml;
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), field) << e.what();
    if (line >= 0) EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_NE(std::string(e.what()).find(field), std::string::npos);
  }
}

}  // namespace

TEST(RunConfig, EmptyDocumentGivesDefaults) {
  const auto cfg = parse_run_config("");
  EXPECT_EQ(cfg.scenario.flow.wind_speed, 8.0);
  EXPECT_EQ(cfg.scenario.turbine.diameter, 126.4);
  EXPECT_EQ(cfg.strategies.size(), kAllStrategies.size());
  EXPECT_EQ(cfg.output_dir, "out");
}

TEST(RunConfig, ReadsNestedFields) {
  const auto cfg = parse_run_config(R"(
flow:
  wind_speed: 9.5
  turbulence_intensity: 0.08
excitation:
  strouhal: 0.3
  amplitude: 2.0
simulation:
  dt: 0.05
  flux: quadratic
grid:
  nx: 160
strategies: [baseline, helix, tilt-dipc]
output:
  dir: results
seed: 42
)");
  EXPECT_EQ(cfg.scenario.flow.wind_speed, 9.5);
  EXPECT_EQ(cfg.scenario.flow.turbulence_intensity, 0.08);
  EXPECT_EQ(cfg.scenario.strategy.excitation.strouhal, 0.3);
  EXPECT_EQ(cfg.scenario.strategy.excitation.amplitude_deg, 2.0);
  EXPECT_EQ(cfg.scenario.dt, 0.05);
  EXPECT_EQ(cfg.scenario.flux, FluxKind::Quadratic);
  EXPECT_EQ(cfg.scenario.grid.nx, 160);
  EXPECT_EQ(cfg.strategies, (std::vector<StrategyKind>{StrategyKind::Baseline, StrategyKind::HelixCCW,
                                                       StrategyKind::TiltDIPC}));
  EXPECT_EQ(cfg.output_dir, "results");
  EXPECT_EQ(cfg.seed, 42u);
}

TEST(RunConfig, GridFollowsDiameter) {
  const auto cfg = parse_run_config("turbine:\n  diameter: 100.0\n");
  EXPECT_DOUBLE_EQ(cfg.scenario.grid.x_extent, 800.0);
  EXPECT_DOUBLE_EQ(cfg.scenario.grid.cross_y, 200.0);
}

TEST(RunConfig, NegativeWindSpeedNamesField) {
  expect_config_error("flow:\n  wind_speed: -8.0\n", "flow.wind_speed", 2);
}

TEST(RunConfig, ErrorsCarryFieldAndLine) {
  expect_config_error("flow:\n  wind_speeed: 8.0\n", "flow.wind_speeed", 2);
  expect_config_error("turbine:\n  diameter: wide\n", "turbine.diameter", 2);
  expect_config_error("strategies: [baseline, swirl]\n", "strategies[1]", 1);
  expect_config_error("simulation:\n  flux: linear\n", "simulation.flux", 2);
  expect_config_error("grid:\n  nx: 4\n", "grid.nx", 2);
  expect_config_error("flow: [1, 2]\n", "flow", 1);
  expect_config_error("flow:\n  wind_speed: [1\n", "<document>");
}

TEST(RunConfig, DurationMustCoverSpinUpAndTenPeriods) {
  expect_config_error("simulation:\n  duration: 500\n", "simulation.duration");
  EXPECT_NO_THROW(parse_run_config("simulation:\n  duration: 2000\n"));
}

TEST(RunConfig, SamplingBoundIsEnforced) {
  expect_config_error("simulation:\n  dt: 0.4\n", "simulation.dt");
}

TEST(RunConfig, HashIsStableAndSensitive) {
  const auto a = parse_run_config("flow:\n  wind_speed: 8.0\n");
  const auto b = parse_run_config("# comment only differs\nflow: {wind_speed: 8.0}\n");
  EXPECT_EQ(config_hash(a), config_hash(b));
  EXPECT_EQ(config_hash_hex(a).size(), 16u);
  auto c = a;
  c.scenario.strategy.excitation.strouhal = 0.2500001;
  EXPECT_NE(config_hash(a), config_hash(c));
  auto d = a;
  d.output_dir = "elsewhere";
  EXPECT_EQ(config_hash(a), config_hash(d));
}

TEST(RunConfig, MissingFileIsAConfigError) {
  EXPECT_THROW(load_run_config("/nonexistent/helixwake.yaml"), ConfigError);
}

TEST(SweepSpecConfig, ParsesAndValidates) {
  const auto spec = parse_sweep_spec(R"(
sweep:
  strategy: tilt-dipc
  strouhal: {min: 0.1, max: 0.5, count: 5}
  amplitude: {min: 1.0, max: 3.0, count: 3}
  objective: energy-power-penalty
  penalty_weight: 1.5
)");
  EXPECT_EQ(spec.kind, StrategyKind::TiltDIPC);
  EXPECT_EQ(spec.st_count, 5);
  EXPECT_EQ(spec.amp_max, 3.0);
  EXPECT_EQ(spec.objective, SweepObjective::EnergyMinusPowerLoss);
  EXPECT_EQ(spec.penalty_weight, 1.5);

  EXPECT_THROW(parse_sweep_spec("sweep:\n  strouhal: {min: 0.6, max: 0.05, count: 12}\n"), ConfigError);
  EXPECT_THROW(parse_sweep_spec("sweep:\n  objective: energy@9D\n"), ConfigError);
  EXPECT_THROW(parse_sweep_spec("other: 1\n"), ConfigError);
}

TEST(SliceGrid, RoundTrip) {
  SliceField f;
  f.x_over_d = 5.0;
  f.ny = 3;
  f.nz = 2;
  f.dy = 1.5;
  f.dz = 2.0;
  f.y0 = -1.5;
  f.z0 = -1.0;
  f.u = {1, 2, 3, 4, 5, 6.25};
  std::ostringstream os;
  write_slice_grid(os, f, "# config_hash=0\n");
  EXPECT_EQ(os.str(),
            "# config_hash=0\n# x_over_d ny nz dy dz\n5 3 2 1.5 2\n"
            "1.000000000 2.000000000 3.000000000\n4.000000000 5.000000000 6.250000000\n");
  std::istringstream is(os.str());
  const auto g = read_slice_grid(is);
  EXPECT_EQ(g.u, f.u);
  EXPECT_EQ(g.ny, 3);
  EXPECT_EQ(g.y0, -1.5);
  EXPECT_EQ(g.z0, -1.0);
}

TEST(SliceGrid, RejectsMalformedInput) {
  std::istringstream short_row("5 3 2 1 1\n1 2 3\n4 5\n");
  EXPECT_THROW(read_slice_grid(short_row), std::runtime_error);
  std::istringstream missing("5 3 2 1 1\n1 2 3\n");
  EXPECT_THROW(read_slice_grid(missing), std::runtime_error);
}

TEST(SliceGrid, RelativeToItselfIsZero) {
  SliceField f;
  f.ny = f.nz = 2;
  f.u = {7.1, 7.9, 6.3, 8.0};
  const auto r = relative_slice(f, f, 8.0);
  for (double v : r.u) EXPECT_EQ(v, 0.0);
}

TEST(Heatmap, DivergingScaleCentredOnZero) {
  SliceField f;
  f.ny = 3;
  f.nz = 1;
  f.u = {-1.0, 0.0, 1.0};
  std::ostringstream os;
  write_heatmap_ppm(os, f, 0.0, 1.0, "# tag");
  const std::string s = os.str();
  const std::string header = "P6\n# tag\n3 1\n255\n";
  ASSERT_EQ(s.substr(0, header.size()), header);
  const auto* px = reinterpret_cast<const unsigned char*>(s.data() + header.size());
  EXPECT_EQ((std::array<int, 3>{px[0], px[1], px[2]}), (std::array<int, 3>{0, 0, 255}));
  EXPECT_EQ((std::array<int, 3>{px[3], px[4], px[5]}), (std::array<int, 3>{255, 255, 255}));
  EXPECT_EQ((std::array<int, 3>{px[6], px[7], px[8]}), (std::array<int, 3>{255, 0, 0}));
}
