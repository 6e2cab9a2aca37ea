#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>

namespace helixwake {

namespace unit {
struct Degrees {};
struct Newtons {};
struct NewtonMeters {};
}  // namespace unit

inline constexpr int kBladeCount = 3;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kBladeSpacing = kTwoPi / kBladeCount;

/// One scalar per blade in the rotating frame. Blade index is 0-based.
template <class Unit>
struct BladeTriple {
  std::array<double, kBladeCount> v{};

  double& operator[](std::size_t b) { return v[b]; }
  double operator[](std::size_t b) const { return v[b]; }

  bool finite() const {
    return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]);
  }
  double mean() const { return (v[0] + v[1] + v[2]) / kBladeCount; }

  friend bool operator==(const BladeTriple&, const BladeTriple&) = default;
};

/// Collective / tilt / yaw components in the non-rotating frame.
template <class Unit>
struct FixedFrameTriple {
  double collective = 0.0;
  double tilt = 0.0;
  double yaw = 0.0;

  bool finite() const {
    return std::isfinite(collective) && std::isfinite(tilt) && std::isfinite(yaw);
  }

  friend bool operator==(const FixedFrameTriple&, const FixedFrameTriple&) = default;
};

using PitchTriple = BladeTriple<unit::Degrees>;
using ForceTriple = BladeTriple<unit::Newtons>;
using MomentTriple = BladeTriple<unit::NewtonMeters>;
using FixedPitch = FixedFrameTriple<unit::Degrees>;
using FixedMoment = FixedFrameTriple<unit::NewtonMeters>;

/// Wraps an angle into [0, 2pi).
double wrap_angle(double rad);

constexpr double rpm_to_rad_per_s(double rpm) { return rpm * kTwoPi / 60.0; }

/// Rotor phase. Only blade 1 is stored; blades 2 and 3 trail it by exactly
/// 2pi/3 and 4pi/3. psi = 0 is the upright position.
class AzimuthState {
 public:
  AzimuthState() = default;
  explicit AzimuthState(double psi1_rad);

  double psi1() const { return psi1_; }
  /// Azimuth of blade b (0-based), wrapped to [0, 2pi).
  double psi(int b) const;

  /// cos/sin of each blade azimuth, built from blade 1 by rotation so the
  /// three-phase sums cancel to rounding.
  std::array<double, kBladeCount> cos_psi() const { return cos_; }
  std::array<double, kBladeCount> sin_psi() const { return sin_; }

  /// Same rotor shifted by a fixed phase (e.g. an MBC azimuth offset).
  AzimuthState shifted(double offset_rad) const { return AzimuthState(psi1_ + offset_rad); }

 private:
  double psi1_ = 0.0;
  std::array<double, kBladeCount> cos_{1.0, -0.5, -0.5};
  std::array<double, kBladeCount> sin_{0.0, std::numbers::sqrt3 / 2.0, -std::numbers::sqrt3 / 2.0};
};

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// T(psi) = 2/3 [0.5 0.5 0.5; cos psi_b; sin psi_b].
Matrix3 transform_matrix(const AzimuthState& az);

/// Analytic inverse: row b is [1, cos psi_b, sin psi_b].
Matrix3 inverse_transform_matrix(const AzimuthState& az);

namespace detail {
std::array<double, 3> forward(const AzimuthState& az, const std::array<double, 3>& blades);
std::array<double, 3> inverse(const AzimuthState& az, const std::array<double, 3>& fixed);
}  // namespace detail

template <class Unit>
FixedFrameTriple<Unit> forward_mbc(const AzimuthState& az, const BladeTriple<Unit>& blades) {
  const auto f = detail::forward(az, blades.v);
  return {f[0], f[1], f[2]};
}

template <class Unit>
BladeTriple<Unit> inverse_mbc(const AzimuthState& az, const FixedFrameTriple<Unit>& fixed) {
  return {detail::inverse(az, {fixed.collective, fixed.tilt, fixed.yaw})};
}

/// Advances blade 1 by rotor_speed * dt and wraps. Throws std::invalid_argument
/// on non-finite input, dt <= 0 or negative speed.
AzimuthState azimuth_advance(const AzimuthState& az, double rotor_speed, double dt);

}  // namespace helixwake
