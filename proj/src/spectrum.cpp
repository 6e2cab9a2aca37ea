#include "helixwake/spectrum.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace helixwake {

namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

}  // namespace

std::vector<double> amplitude_spectrum(std::span<const double> signal) {
  const std::size_t n = signal.size();
  if (n < 2) throw std::invalid_argument("amplitude_spectrum: need at least two samples");
  const double mean = std::accumulate(signal.begin(), signal.end(), 0.0) / static_cast<double>(n);

  std::unique_ptr<double, FftwFree> in(static_cast<double*>(fftw_malloc(sizeof(double) * n)));
  std::unique_ptr<fftw_complex, FftwFree> out(
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (n / 2 + 1))));
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(), FFTW_ESTIMATE);
  }

  double wsum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                          static_cast<double>(n));
    wsum += w;
    in.get()[i] = (signal[i] - mean) * w;
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }

  std::vector<double> amp(n / 2 + 1);
  for (std::size_t k = 0; k < amp.size(); ++k) {
    const double re = out.get()[k][0];
    const double im = out.get()[k][1];
    amp[k] = 2.0 * std::hypot(re, im) / wsum;
  }
  amp[0] = 0.0;
  return amp;
}

std::vector<SpectralPeak> spectrum_peaks(std::span<const double> signal, double dt,
                                         std::size_t n_peaks) {
  if (signal.size() < 1024) throw std::invalid_argument("spectrum_peaks: need at least 1024 samples");
  if (!(dt > 0.0)) throw std::invalid_argument("spectrum_peaks: dt must be positive");
  const auto amp = amplitude_spectrum(signal);
  const double df = 1.0 / (static_cast<double>(signal.size()) * dt);
  const double floor = 1e-12 * *std::max_element(amp.begin(), amp.end());

  std::vector<SpectralPeak> peaks;
  for (std::size_t k = 1; k + 1 < amp.size(); ++k) {
    if (amp[k] <= floor || amp[k] < amp[k - 1] || amp[k] <= amp[k + 1]) continue;
    // Hann main lobe is close to Gaussian, so a parabola in log space is accurate
    const double a = std::log(std::max(amp[k - 1], floor));
    const double b = std::log(amp[k]);
    const double c = std::log(std::max(amp[k + 1], floor));
    const double denom = a - 2.0 * b + c;
    double offset = denom < 0.0 ? 0.5 * (a - c) / denom : 0.0;
    offset = std::clamp(offset, -0.5, 0.5);
    const double peak_log = b - 0.25 * (a - c) * offset;
    peaks.push_back({(static_cast<double>(k) + offset) * df, std::exp(peak_log)});
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [](const auto& l, const auto& r) { return l.amplitude > r.amplitude; });
  if (peaks.size() > n_peaks) peaks.resize(n_peaks);
  return peaks;
}

}  // namespace helixwake
