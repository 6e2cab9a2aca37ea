#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "helixwake/simulation.hpp"

using namespace helixwake;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kD = 126.4;

SliceField uniform_slice(double value, int n = 64, double extent = 2 * kD) {
  SliceField s;
  s.ny = s.nz = n;
  s.dy = s.dz = extent / (n - 1);
  s.y0 = s.z0 = -extent / 2;
  s.u.assign(static_cast<std::size_t>(n) * n, value);
  return s;
}

// Axisymmetric Gaussian wake: 0.5 rho int_0^R u(r)^3 2 pi r dr by composite Simpson.
double polar_energy_oracle(double U, double deficit, double sigma, double radius, double rho) {
  const int n = 20000;
  const double h = radius / n;
  auto f = [&](double r) {
    const double u = U * (1.0 - deficit * std::exp(-r * r / (2 * sigma * sigma)));
    return u * u * u * 2 * kPi * r;
  };
  double acc = f(0.0) + f(radius);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return 0.5 * rho * acc * h / 3.0;
}

TurbineTimeSeries tone_series(double amplitude, double freq, double duration, double dt) {
  TurbineTimeSeries s;
  s.dt = dt;
  const auto n = static_cast<std::size_t>(duration / dt) + 1;
  for (std::size_t i = 0; i < n; ++i) {
    TurbineSample x;
    x.t = i * dt;
    for (int b = 0; b < 3; ++b) x.pitch[b] = amplitude * std::sin(2 * kPi * freq * x.t + b);
    s.samples.push_back(x);
  }
  return s;
}

ScenarioConfig scenario(StrategyKind kind) {
  ScenarioConfig cfg;
  cfg.strategy.kind = kind;
  return cfg;
}

}  // namespace

TEST(StreamtubeEnergy, UniformFlowClosedForm) {
  const FlowConditions flow;
  const TurbineParams params;
  const double closed = 0.5 * 1.225 * 512.0 * kPi * kD * kD / 4.0;
  EXPECT_NEAR(streamtube_energy(uniform_slice(8.0), flow, params) / closed, 1.0, 1e-4);
  const double quad = 0.5 * 1.225 * 64.0 * kPi * kD * kD / 4.0;
  EXPECT_NEAR(streamtube_energy(uniform_slice(8.0), flow, params, FluxKind::Quadratic) / quad, 1.0, 1e-4);
  EXPECT_EQ(streamtube_energy(uniform_slice(0.0), flow, params), 0.0);
}

TEST(StreamtubeEnergy, DiskAreaConverges) {
  for (int n : {32, 64, 128}) {
    const auto s = uniform_slice(1.0, n);
    const auto disk = DiskQuadrature::for_slice(s, kD);
    EXPECT_NEAR(disk.covered_area() / (kPi * kD * kD / 4), 1.0, 1e-4) << n;
  }
}

TEST(StreamtubeEnergy, GaussianWakeMatchesFineQuadrature) {
  const auto w = init_wake(WakeGridConfig{}, TurbineParams{}, FlowConditions{}, WakeModelParams{});
  for (double xd : {3.0, 5.0, 7.0}) {
    const auto st = w.at(xd * kD);
    const double coarse = streamtube_energy(slice(w, xd), FlowConditions{}, TurbineParams{});
    const double fine = polar_energy_oracle(8.0, st.deficit, st.sigma, kD / 2, 1.225);
    EXPECT_NEAR(coarse / fine, 1.0, 0.005) << xd;
    EXPECT_LT(coarse, 0.5 * 1.225 * 512.0 * kPi * kD * kD / 4.0);
  }
}

TEST(StreamtubeEnergy, GaussianWakeMatchesFourTimesFinerGrid) {
  const auto w = init_wake(WakeGridConfig{}, TurbineParams{}, FlowConditions{}, WakeModelParams{});
  const auto coarse = slice(w, 5.0);
  WakeGridConfig fine_grid;
  fine_grid.ny = fine_grid.nz = 4 * 63 + 1;
  const auto wf = init_wake(fine_grid, TurbineParams{}, FlowConditions{}, WakeModelParams{});
  const auto fine = slice(wf, 5.0);
  const double ec = streamtube_energy(coarse, FlowConditions{}, TurbineParams{});
  const double ef = streamtube_energy(fine, FlowConditions{}, TurbineParams{});
  EXPECT_NEAR(ec / ef, 1.0, 0.005);
}

TEST(StreamtubeEnergy, MonotoneInVelocity) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(2.0, 9.0), bump(0.0, 0.5);
  for (int trial = 0; trial < 20; ++trial) {
    auto lo = uniform_slice(0.0);
    for (auto& v : lo.u) v = u(rng);
    auto hi = lo;
    for (auto& v : hi.u) v += bump(rng);
    EXPECT_GE(streamtube_energy(hi, FlowConditions{}, TurbineParams{}),
              streamtube_energy(lo, FlowConditions{}, TurbineParams{}));
  }
}

TEST(StreamtubeEnergy, DiskMustFitOnGrid) {
  const auto s = uniform_slice(8.0, 64, 0.8 * kD);
  EXPECT_THROW(DiskQuadrature::for_slice(s, kD), std::invalid_argument);
}

TEST(PitchActivity, PureToneMeanAbsoluteRate) {
  const auto s = tone_series(2.5, 0.169, 1000.0, 0.1);
  EXPECT_NEAR(4 * 2.5 * 0.169, 1.69, 1e-12);
  EXPECT_NEAR(pitch_activity(s, 0.0158), 1.69, 0.005 * 1.69);
}

TEST(PitchActivity, ConstantPitchIsExactlyZero) {
  const double fe = excitation_frequency(0.25, FlowConditions{}, kD);
  for (auto kind : {StrategyKind::Baseline, StrategyKind::SIC}) {
    StrategyConfig cfg;
    cfg.kind = kind;
    const auto s = simulate_turbine(cfg, TurbineParams{}, FlowConditions{}, 11.0 / fe, 0.1);
    EXPECT_EQ(pitch_activity(s, fe), 0.0);
  }
}

TEST(PitchActivity, DipcSchedulesNearPublishedRates) {
  const double fe = excitation_frequency(0.25, FlowConditions{}, kD);
  auto activity = [&](StrategyKind kind) {
    StrategyConfig cfg;
    cfg.kind = kind;
    return pitch_activity(simulate_turbine(cfg, TurbineParams{}, FlowConditions{}, 20.0 / fe, 0.1), fe);
  };
  EXPECT_NEAR(activity(StrategyKind::TiltDIPC), 0.99, 0.10);
  EXPECT_NEAR(activity(StrategyKind::YawDIPC), 0.99, 0.10);
  EXPECT_NEAR(activity(StrategyKind::HelixCCW), 1.69, 0.08);
}

TEST(PitchActivity, NeedsTenPeriods) {
  EXPECT_THROW(pitch_activity(tone_series(1.0, 0.1, 100.0, 0.1), 0.0158), std::invalid_argument);
}

TEST(ChannelDelta, SelfComparisonIsZero) {
  const std::vector<double> x{1.0, 2.0, 3.5, 2.2};
  const auto d = channel_delta(x, x);
  EXPECT_EQ(d.mean_pct, 0.0);
  EXPECT_EQ(d.variance_pct, 0.0);
}

TEST(ChannelDelta, ConstantSignalsGuardZeroVariance) {
  const double delta = 0.037;
  const std::vector<double> ref(50, 4.0), test(50, 4.0 * (1 + delta));
  const auto d = channel_delta(test, ref);
  EXPECT_NEAR(d.mean_pct, 100 * delta, 1e-9);
  EXPECT_EQ(d.variance_pct, 0.0);
}

TEST(ChannelDelta, SwappingNegatesSmallDeltasToFirstOrder) {
  const double delta = 1e-3;
  std::vector<double> a(200), b(200);
  for (int i = 0; i < 200; ++i) {
    a[i] = 10.0 + std::sin(0.1 * i);
    b[i] = a[i] * (1 + delta);
  }
  const auto ab = channel_delta(a, b);
  const auto ba = channel_delta(b, a);
  EXPECT_NEAR(ab.mean_pct, -ba.mean_pct, 100 * 2 * delta * delta);
}

TEST(SeriesStats, SelfComparisonIsZero) {
  StrategyConfig cfg;
  cfg.kind = StrategyKind::HelixCCW;
  const auto s = simulate_turbine(cfg, TurbineParams{}, FlowConditions{}, 300.0, 0.1);
  const auto st = series_stats(s, s, 50.0);
  for (const auto& c : {st.power, st.thrust, st.moment}) {
    EXPECT_EQ(c.mean_pct, 0.0);
    EXPECT_EQ(c.variance_pct, 0.0);
  }
}

TEST(SeriesStats, ConstantOffsetShowsAsMeanDelta) {
  StrategyConfig base, sic;
  sic.kind = StrategyKind::SIC;
  const auto b = simulate_turbine(base, TurbineParams{}, FlowConditions{}, 300.0, 0.1);
  const auto s = simulate_turbine(sic, TurbineParams{}, FlowConditions{}, 300.0, 0.1);
  const auto st = series_stats(s, b, 0.0);
  const double offset = kDefaultDeratePitchDeg;
  EXPECT_NEAR(st.power.mean_pct, -100 * TurbineParams{}.pitch_power_curvature * offset * offset, 1e-9);
  EXPECT_NEAR(st.thrust.mean_pct, -100 * TurbineParams{}.pitch_thrust_gain * offset, 1e-9);
  EXPECT_EQ(st.power.variance_pct, 0.0);
}

TEST(Simulation, TimingDefinitions) {
  const auto t = scenario_timing(scenario(StrategyKind::HelixCCW));
  EXPECT_NEAR(t.excitation_frequency, 0.25 * 8.0 / kD, 1e-15);
  EXPECT_NEAR(t.rotor_frequency, 7.55 * 8.0 / 63.2 / (2 * kPi), 1e-12);
  EXPECT_GE(t.rotor_frequency, 0.152);
  EXPECT_LE(t.rotor_frequency, 0.154);
  const double u_adv = 8.0 * (1 - axial_induction(0.77));
  EXPECT_NEAR(t.advection_time, 8 * kD / u_adv, 1e-9);
  EXPECT_NEAR(t.duration, t.spin_up + 10.0 / t.excitation_frequency, 1e-9);
}

TEST(Simulation, DeterministicAcrossRuns) {
  const auto a = run_scenario(scenario(StrategyKind::TiltDIPC));
  const auto b = run_scenario(scenario(StrategyKind::TiltDIPC));
  EXPECT_EQ(a.mean_energy, b.mean_energy);
  ASSERT_EQ(a.series.size(), b.series.size());
  for (std::size_t i = 0; i < a.series.size(); ++i) EXPECT_EQ(a.series.samples[i].power, b.series.samples[i].power);
}
