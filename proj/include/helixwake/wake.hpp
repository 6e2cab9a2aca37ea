#pragma once

#include <deque>
#include <utility>
#include <vector>

#include "helixwake/excitation.hpp"
#include "helixwake/rotor.hpp"

namespace helixwake {

/// Desk-scale wake domain: x_extent downstream of the rotor, cross_y by
/// cross_z centred on the hub. Node counts per axis; dt must equal the
/// turbine dt.
struct WakeGridConfig {
  double x_extent = 8.0 * 126.4;  // m
  double cross_y = 2.0 * 126.4;   // m
  double cross_z = 2.0 * 126.4;   // m
  int nx = 128;
  int ny = 64;
  int nz = 64;
  double dt = 0.1;

  static WakeGridConfig for_diameter(double diameter, double dt = 0.1);

  double dx() const { return x_extent / nx; }
  double dy() const { return cross_y / (ny - 1); }
  double dz() const { return cross_z / (nz - 1); }

  /// Throws std::invalid_argument on bad extents/counts or when U dt > dx.
  void validate(double wind_speed) const;
};

/// Constants of the reduced-order wake. Rates are per rotor diameter
/// travelled; TI enters additively. Defaults come from tools/calibrate.cpp.
struct WakeModelParams {
  /// Rotor-plane crossflow speed per unit normalized moment, in units of U.
  double deflection_gain = 0.2084;
  double recovery_base = 0.0;
  double recovery_ti = 0.5;
  double expansion_base = 0.004;
  double expansion_ti = 0.38;
  /// gamma: recovery and expansion are scaled by (1 + gamma * mixing).
  double mixing_gain = 46.35;
  /// Weight of vertical meandering relative to horizontal in the mixing measure.
  double vertical_mixing_weight = 2.0;
  /// Weight of centreline velocity pulsing (collective thrust variation).
  double axial_mixing_weight = 1.0;
  /// Width growth keeps deficit * sigma^2 fixed when true.
  bool spreading_conserves_deficit = true;
  /// Trailing window of the mixing measure, s. Normally one excitation period.
  double mixing_window = 63.2;

  void validate() const;
};

/// Interpolated wake properties at one downstream station.
struct StationRecord {
  double x = 0.0;        // m
  double y_c = 0.0;      // m
  double z_c = 0.0;      // m
  double deficit = 0.0;  // fraction of U on the centreline
  double sigma = 0.0;    // m
  double mixing = 0.0;   // dimensionless mixing measure
};

/// Wake history is carried by fluid parcels released from the rotor every
/// step and advected at a uniform speed, so parcel j sits exactly at
/// j * U_adv * dt (the characteristic of the 1D advection equation).
/// Stations at fixed x sample the parcels by linear interpolation.
class WakeState {
 public:
  double time() const { return time_; }
  double advection_speed() const { return u_adv_; }
  double sigma0() const { return sigma0_; }
  double diameter() const { return diameter_; }
  double wind_speed() const { return wind_speed_; }
  double lag_time_constant() const { return tau_; }
  const WakeGridConfig& grid() const { return grid_; }
  const WakeModelParams& model() const { return model_; }
  const std::vector<StationRecord>& stations() const { return stations_; }
  /// Rotor-plane crossflow speed (v_y, v_z) after the first-order lag.
  std::pair<double, double> boundary_velocity() const { return {vy_, vz_}; }

  /// Interpolated station record at x (0 <= x <= x_extent).
  StationRecord at(double x) const;

  /// Axial velocity at a point of the 3D grid.
  double axial_velocity(double x, double y, double z) const;
  /// Full 3D field, index ((i * nz) + k) * ny + j.
  std::vector<double> velocity_field() const;

 private:
  struct Parcel {
    double y = 0.0;
    double z = 0.0;
    double vy = 0.0;
    double vz = 0.0;
    double deficit = 0.0;
    double sigma = 0.0;
  };

  // Trailing window of one station signal and its time derivative.
  struct Channel {
    std::vector<double> value, rate2;
    double sum = 0, sum2 = 0, sum_rate2 = 0, last = 0;

    double rms_excursion(double n) const;
    double rms_rate(double n) const;
  };
  // y_c, z_c, centreline deficit
  using StationHistory = std::array<Channel, 3>;

  friend WakeState init_wake(const WakeGridConfig&, const TurbineParams&, const FlowConditions&,
                             const WakeModelParams&);
  friend void step_wake(WakeState&, const TurbineSample&, double);

  void evolve(Parcel& p, double x, double dt) const;
  double mixing_at(double x) const;
  void resample_stations();
  void update_mixing(double dt);

  WakeGridConfig grid_;
  WakeModelParams model_;
  double diameter_ = 0.0;
  double wind_speed_ = 0.0;
  double ti_ = 0.0;
  double q_area_ = 0.0;  // 0.5 rho U^2 A
  double u_adv_ = 0.0;
  double sigma0_ = 0.0;
  double tau_ = 0.0;
  double time_ = 0.0;
  double vy_ = 0.0;
  double vz_ = 0.0;
  std::size_t window_ = 1;
  std::size_t head_ = 0;
  std::size_t filled_ = 0;
  long steps_ = 0;
  std::deque<Parcel> parcels_;
  std::vector<StationRecord> stations_;
  std::vector<StationHistory> history_;
};

/// Baseline wake: parcels pre-filled with the steady unforced solution,
/// zero deflection, near-wake deficit 1 - sqrt(1 - C_T).
WakeState init_wake(const WakeGridConfig& grid, const TurbineParams& params,
                    const FlowConditions& flow, const WakeModelParams& model);

/// Advances the wake by dt using the turbine sample at the current wake time.
void step_wake(WakeState& state, const TurbineSample& sample, double dt);

/// Centreline offset (y_c, z_c) at x. Throws std::out_of_range outside [0, x_extent].
std::pair<double, double> centerline(const WakeState& state, double x);

/// Cross-plane axial velocity on a regular grid, rows ordered by z.
struct SliceField {
  double x_over_d = 0.0;
  int ny = 0;
  int nz = 0;
  double dy = 0.0;
  double dz = 0.0;
  double y0 = 0.0;  // coordinate of column 0 relative to the hub
  double z0 = 0.0;  // coordinate of row 0 relative to the hub
  std::vector<double> u;  // u[k * ny + j]

  double y(int j) const { return y0 + j * dy; }
  double z(int k) const { return z0 + k * dz; }
  double& at(int j, int k) { return u[static_cast<std::size_t>(k) * ny + j]; }
  double at(int j, int k) const { return u[static_cast<std::size_t>(k) * ny + j]; }
};

/// Gaussian deficit sampled on the cross plane at x = x_over_d * D.
SliceField slice(const WakeState& state, double x_over_d);

/// Momentum-theory axial induction a = (1 - sqrt(1 - C_T)) / 2.
double axial_induction(double ct);

}  // namespace helixwake
