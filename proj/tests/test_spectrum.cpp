#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "helixwake/excitation.hpp"
#include "helixwake/rotor.hpp"
#include "helixwake/spectrum.hpp"

using namespace helixwake;

namespace {

constexpr double kPi = std::numbers::pi;

// Direct O(n^2) Hann-windowed DFT, same normalization as the library.
std::vector<double> naive_spectrum(const std::vector<double>& x) {
  const std::size_t n = x.size();
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= n;
  std::vector<double> w(n);
  double wsum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2 * kPi * i / n);
    wsum += w[i];
  }
  std::vector<double> amp(n / 2 + 1);
  // the DC bin is reported as zero
  for (std::size_t k = 1; k <= n / 2; ++k) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += (x[i] - mean) * w[i] * std::polar(1.0, -2 * kPi * double(k * i % n) / n);
    }
    amp[k] = 2.0 * std::abs(acc) / wsum;
  }
  return amp;
}

std::vector<double> blade1_pitch(StrategyKind kind, std::size_t n, double dt) {
  StrategyConfig cfg;
  cfg.kind = kind;
  const TurbineParams p;
  const FlowConditions f;
  const auto s = simulate_turbine(cfg, p, f, n * dt + 1e-6, dt);
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(s.samples[i].pitch[0]);
  return out;
}

}  // namespace

TEST(AmplitudeSpectrum, MatchesDirectDft) {
  std::vector<double> x(1024);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = 1.5 + std::sin(0.37 * i) + 0.3 * std::cos(1.1 * i + 0.2) + 0.01 * ((i * 7919) % 13);
  }
  const auto fast = amplitude_spectrum(x);
  const auto slow = naive_spectrum(x);
  ASSERT_EQ(fast.size(), slow.size());
  for (std::size_t k = 0; k < fast.size(); ++k) EXPECT_NEAR(fast[k], slow[k], 1e-10);
}

TEST(SpectrumPeaks, KnownTone) {
  const double dt = 0.1;
  std::vector<double> x(4096);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::sin(2 * kPi * 0.2 * i * dt);
  const auto peaks = spectrum_peaks(x, dt, 3);
  ASSERT_FALSE(peaks.empty());
  const double bin = 1.0 / (x.size() * dt);
  EXPECT_NEAR(peaks[0].frequency, 0.2, bin);
  EXPECT_NEAR(peaks[0].amplitude, 1.0, 0.02);
}

TEST(SpectrumPeaks, InvariantToOffsetAndScale) {
  const double dt = 0.1;
  std::vector<double> x(2048), y(2048);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = std::sin(2 * kPi * 0.13 * i * dt) + 0.4 * std::sin(2 * kPi * 0.71 * i * dt);
    y[i] = 7.0 + 3.0 * x[i];
  }
  const auto px = spectrum_peaks(x, dt, 2);
  const auto py = spectrum_peaks(y, dt, 2);
  ASSERT_EQ(px.size(), py.size());
  for (std::size_t i = 0; i < px.size(); ++i) {
    EXPECT_NEAR(px[i].frequency, py[i].frequency, 1e-9);
    EXPECT_NEAR(3.0 * px[i].amplitude, py[i].amplitude, 1e-9);
  }
}

TEST(SpectrumPeaks, RejectsShortSignals) {
  std::vector<double> x(512, 0.0);
  EXPECT_THROW(spectrum_peaks(x, 0.1, 1), std::invalid_argument);
}

TEST(SpectrumPeaks, TiltPitchHasTwoEqualSidebands) {
  const double dt = 0.1;
  const auto x = blade1_pitch(StrategyKind::TiltDIPC, 4096, dt);
  const TurbineParams p;
  const FlowConditions f;
  const double fr = rotor_speed_for_wind(p, f) / (2 * kPi);
  const double fe = excitation_frequency(0.25, f, p.diameter);
  const double bin = 1.0 / (4096 * dt);
  const auto peaks = spectrum_peaks(x, dt, 2);
  ASSERT_EQ(peaks.size(), 2u);
  const double lo = std::min(peaks[0].frequency, peaks[1].frequency);
  const double hi = std::max(peaks[0].frequency, peaks[1].frequency);
  EXPECT_NEAR(lo, fr - fe, bin);
  EXPECT_NEAR(hi, fr + fe, bin);
  EXPECT_NEAR(peaks[1].amplitude / peaks[0].amplitude, 1.0, 0.1);
}

TEST(SpectrumPeaks, HelixPitchHasOneDominantTone) {
  const double dt = 0.1;
  const TurbineParams p;
  const FlowConditions f;
  const double fr = rotor_speed_for_wind(p, f) / (2 * kPi);
  const double fe = excitation_frequency(0.25, f, p.diameter);
  const double bin = 1.0 / (4096 * dt);
  for (auto [kind, expected] : {std::pair{StrategyKind::HelixCCW, fr + fe}, std::pair{StrategyKind::HelixCW, fr - fe}}) {
    const auto peaks = spectrum_peaks(blade1_pitch(kind, 4096, dt), dt, 2);
    ASSERT_GE(peaks.size(), 1u);
    EXPECT_NEAR(peaks[0].frequency, expected, bin);
    if (peaks.size() > 1) EXPECT_LT(peaks[1].amplitude, 0.1 * peaks[0].amplitude);
  }
}

TEST(SpectrumPeaks, DominantPeaksMatchPredictedFrequencies) {
  const double dt = 0.1;
  const TurbineParams p;
  const FlowConditions f;
  const double fr = rotor_speed_for_wind(p, f) / (2 * kPi);
  const double fe = excitation_frequency(0.25, f, p.diameter);
  const double bin = 1.0 / (8192 * dt);
  for (auto kind : {StrategyKind::YawDIPC, StrategyKind::TiltDIPC, StrategyKind::HelixCCW,
                    StrategyKind::HelixCW, StrategyKind::DIC}) {
    const auto predicted = predicted_pitch_frequencies(kind, fr, fe);
    const auto peaks = spectrum_peaks(blade1_pitch(kind, 8192, dt), dt, predicted.size());
    ASSERT_EQ(peaks.size(), predicted.size());
    for (const auto& pk : peaks) {
      const bool matched = std::any_of(predicted.begin(), predicted.end(),
                                       [&](double fp) { return std::abs(fp - pk.frequency) <= bin; });
      EXPECT_TRUE(matched) << to_string(kind) << " peak at " << pk.frequency;
    }
  }
}
