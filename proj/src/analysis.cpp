#include "helixwake/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace helixwake {

namespace {

// Area of the disk x^2 + y^2 < r^2 inside [x0, x1] x [y0, y1].
double disk_rect_area(double r, double x0, double x1, double y0, double y1) {
  x0 = std::max(x0, -r);
  x1 = std::min(x1, r);
  if (x1 <= x0 || y1 <= y0) return 0.0;
  const double r2 = r * r;
  auto half = [&](double x) { return std::sqrt(std::max(0.0, r2 - x * x)); };
  // antiderivative of the half chord
  auto chord_integral = [&](double x) {
    return 0.5 * (x * half(x) + r2 * std::asin(std::clamp(x / r, -1.0, 1.0)));
  };
  std::vector<double> breaks{x0, x1};
  for (double y : {y0, y1}) {
    if (y * y < r2) {
      const double xb = std::sqrt(r2 - y * y);
      for (double b : {-xb, xb}) {
        if (b > x0 && b < x1) breaks.push_back(b);
      }
    }
  }
  std::sort(breaks.begin(), breaks.end());
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    if (b <= a) continue;
    const double s = half(0.5 * (a + b));
    if (std::min(y1, s) <= std::max(y0, -s)) continue;
    const double arc = chord_integral(b) - chord_integral(a);
    const double top = y1 < s ? y1 * (b - a) : arc;
    const double bottom = y0 > -s ? y0 * (b - a) : -arc;
    area += top - bottom;
  }
  return area;
}

double mean_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double variance_of(const std::vector<double>& v, double mean) {
  if (v.size() < 2) return 0.0;
  double acc = 0.0;
  for (double x : v) acc += (x - mean) * (x - mean);
  return acc / static_cast<double>(v.size());
}

}  // namespace

DiskQuadrature::DiskQuadrature(int ny, int nz, double dy, double dz, double y0, double z0,
                               double diameter, double center_y, double center_z) {
  const double r = 0.5 * diameter;
  const double y_max = y0 + (ny - 1) * dy;
  const double z_max = z0 + (nz - 1) * dz;
  constexpr double slack = 1e-9;
  if (center_y - r < y0 - slack || center_y + r > y_max + slack || center_z - r < z0 - slack ||
      center_z + r > z_max + slack) {
    throw std::invalid_argument("streamtube disk exceeds the slice grid");
  }
  for (int k = 0; k < nz; ++k) {
    const double zc = z0 + k * dz;
    const double zlo = std::max(zc - 0.5 * dz, z0);
    const double zhi = std::min(zc + 0.5 * dz, z_max);
    for (int j = 0; j < ny; ++j) {
      const double yc = y0 + j * dy;
      const double ylo = std::max(yc - 0.5 * dy, y0);
      const double yhi = std::min(yc + 0.5 * dy, y_max);
      const double w = disk_rect_area(r, ylo - center_y, yhi - center_y, zlo - center_z, zhi - center_z);
      if (w > 0.0) nodes_.push_back({j, k, w});
    }
  }
}

DiskQuadrature DiskQuadrature::for_slice(const SliceField& s, double diameter) {
  return DiskQuadrature(s.ny, s.nz, s.dy, s.dz, s.y0, s.z0, diameter);
}

double DiskQuadrature::covered_area() const {
  double a = 0.0;
  for (const auto& n : nodes_) a += n.weight;
  return a;
}

double streamtube_energy(const SliceField& slice, const DiskQuadrature& disk,
                         const FlowConditions& flow, FluxKind kind) {
  double acc = 0.0;
  for (const auto& n : disk.nodes()) {
    const double u = slice.at(n.j, n.k);
    acc += n.weight * (kind == FluxKind::Cubic ? u * u * u : u * u);
  }
  return 0.5 * flow.air_density * acc;
}

double streamtube_energy(const SliceField& slice, const FlowConditions& flow,
                         const TurbineParams& params, FluxKind kind) {
  return streamtube_energy(slice, DiskQuadrature::for_slice(slice, params.diameter), flow, kind);
}

double momentum_deficit_integral(const SliceField& slice, double wind_speed) {
  double acc = 0.0;
  for (int k = 0; k < slice.nz; ++k) {
    const double wk = (k == 0 || k == slice.nz - 1) ? 0.5 : 1.0;
    for (int j = 0; j < slice.ny; ++j) {
      const double wj = (j == 0 || j == slice.ny - 1) ? 0.5 : 1.0;
      const double u = slice.at(j, k);
      acc += wj * wk * (wind_speed - u) * u;
    }
  }
  return acc * slice.dy * slice.dz;
}

double pitch_activity(const TurbineTimeSeries& series, double excitation_frequency) {
  if (!(excitation_frequency > 0.0)) {
    throw std::invalid_argument("pitch_activity: excitation frequency must be positive");
  }
  const double span = series.size() < 2 ? 0.0 : series.samples.back().t - series.samples.front().t;
  if (span * excitation_frequency < 10.0 - 1e-9) {
    throw std::invalid_argument("pitch_activity: series shorter than ten excitation periods");
  }
  double acc = 0.0;
  for (std::size_t i = 1; i < series.size(); ++i) {
    const auto& a = series.samples[i - 1];
    const auto& b = series.samples[i];
    const double h = b.t - a.t;
    for (int blade = 0; blade < kBladeCount; ++blade) acc += std::abs(b.pitch[blade] - a.pitch[blade]) / h;
  }
  return acc / (static_cast<double>(series.size() - 1) * kBladeCount);
}

ChannelDelta channel_delta(const std::vector<double>& test, const std::vector<double>& reference) {
  const double mt = mean_of(test);
  const double mr = mean_of(reference);
  const double vt = variance_of(test, mt);
  const double vr = variance_of(reference, mr);

  ChannelDelta d;
  d.mean_pct = mr != 0.0 ? 100.0 * (mt - mr) / mr : 0.0;
  const double scale = mr * mr;
  // a variance below rounding level of the mean is treated as exactly zero
  const double tiny = 1e-24 * scale;
  if (vr > tiny) {
    d.variance_pct = 100.0 * (vt - vr) / vr;
  } else if (vt <= tiny) {
    d.variance_pct = 0.0;
  } else {
    d.variance_pct = scale > 0.0 ? 100.0 * vt / scale : 0.0;
  }
  return d;
}

SeriesStats series_stats(const TurbineTimeSeries& series, const TurbineTimeSeries& baseline,
                         double discard_time) {
  if (series.size() != baseline.size() || std::abs(series.dt - baseline.dt) > 1e-12) {
    throw std::invalid_argument("series_stats: series sampling does not match the baseline");
  }
  std::vector<double> p, t, m, bp, bt, bm;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series.samples[i].t < discard_time) continue;
    p.push_back(series.samples[i].power);
    t.push_back(series.samples[i].thrust);
    m.push_back(series.samples[i].moment[0]);
    bp.push_back(baseline.samples[i].power);
    bt.push_back(baseline.samples[i].thrust);
    bm.push_back(baseline.samples[i].moment[0]);
  }
  if (p.empty()) throw std::invalid_argument("series_stats: nothing left after spin-up discard");
  return {channel_delta(p, bp), channel_delta(t, bt), channel_delta(m, bm)};
}

}  // namespace helixwake
