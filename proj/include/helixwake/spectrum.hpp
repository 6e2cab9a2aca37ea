#pragma once

#include <span>
#include <vector>

namespace helixwake {

struct SpectralPeak {
  double frequency = 0.0;  // Hz
  double amplitude = 0.0;  // same unit as the signal
};

/// Single-sided Hann-windowed amplitude spectrum (DC removed). Bin k is at
/// k / (n dt); amplitudes are scaled so a tone on a bin reads its amplitude.
std::vector<double> amplitude_spectrum(std::span<const double> signal);

/// Local maxima of the windowed spectrum, largest first. Frequency and
/// amplitude are refined by a parabola through the peak bin and its two
/// neighbours (log magnitude), so they stay within one bin of the raw maximum.
/// Requires a uniformly sampled signal with at least 1024 samples.
std::vector<SpectralPeak> spectrum_peaks(std::span<const double> signal, double dt,
                                         std::size_t n_peaks);

}  // namespace helixwake
