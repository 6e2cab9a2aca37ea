#pragma once

#include <vector>

#include "helixwake/excitation.hpp"
#include "helixwake/rotor.hpp"
#include "helixwake/wake.hpp"

namespace helixwake {

/// Power flux (u^3) or kinetic energy density flux (u^2) through the disk.
enum class FluxKind { Cubic, Quadratic };

/// Quadrature weights for a rotor-sized disk on a slice grid. Each node owns
/// its trapezoid dual cell; the weight is the part of that cell inside the
/// disk, resolved by sub-sampling the cell.
class DiskQuadrature {
 public:
  struct Node {
    int j = 0;
    int k = 0;
    double weight = 0.0;  // m^2
  };

  /// Throws std::invalid_argument when the disk does not fit on the grid.
  DiskQuadrature(int ny, int nz, double dy, double dz, double y0, double z0, double diameter,
                 double center_y = 0.0, double center_z = 0.0);
  static DiskQuadrature for_slice(const SliceField& s, double diameter);

  const std::vector<Node>& nodes() const { return nodes_; }
  double covered_area() const;

 private:
  std::vector<Node> nodes_;
};

/// 0.5 rho integral(u^3) dA (or u^2) over a disk of diameter D centred on the
/// undeflected hub.
double streamtube_energy(const SliceField& slice, const FlowConditions& flow,
                         const TurbineParams& params, FluxKind kind = FluxKind::Cubic);
double streamtube_energy(const SliceField& slice, const DiskQuadrature& disk,
                         const FlowConditions& flow, FluxKind kind = FluxKind::Cubic);

/// Trapezoid integral of (U - u) u over the whole slice, m^4/s^2.
double momentum_deficit_integral(const SliceField& slice, double wind_speed);

/// Mean over blades and samples of |d theta / dt|, deg/s. The series must
/// span at least ten excitation periods.
double pitch_activity(const TurbineTimeSeries& series, double excitation_frequency);

struct ChannelDelta {
  double mean_pct = 0.0;
  double variance_pct = 0.0;
};

/// Power, thrust magnitude and blade-1 flapwise root moment relative to a
/// baseline run.
struct SeriesStats {
  ChannelDelta power;
  ChannelDelta thrust;
  ChannelDelta moment;
};

/// Relative change of a sample mean and variance, in percent. When the
/// reference variance is zero (a constant reference), the variance change is
/// expressed against the squared reference mean instead; 0/0 reads 0.
ChannelDelta channel_delta(const std::vector<double>& test, const std::vector<double>& reference);

/// Statistics over samples with t >= discard_time. Both series need the same
/// dt and length.
SeriesStats series_stats(const TurbineTimeSeries& series, const TurbineTimeSeries& baseline,
                         double discard_time);

}  // namespace helixwake
