#include "helixwake/mbc.hpp"

#include <stdexcept>

namespace helixwake {

double wrap_angle(double rad) {
  double w = std::fmod(rad, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod of a value just below a negative multiple can round up to 2pi
  if (w >= kTwoPi) w = 0.0;
  return w;
}

AzimuthState::AzimuthState(double psi1_rad) : psi1_(wrap_angle(psi1_rad)) {
  constexpr double half_sqrt3 = std::numbers::sqrt3 / 2.0;
  const double c = std::cos(psi1_);
  const double s = std::sin(psi1_);
  // cos(psi + 2pi/3), cos(psi + 4pi/3) and matching sines
  cos_ = {c, -0.5 * c - half_sqrt3 * s, -0.5 * c + half_sqrt3 * s};
  sin_ = {s, -0.5 * s + half_sqrt3 * c, -0.5 * s - half_sqrt3 * c};
}

double AzimuthState::psi(int b) const {
  if (b < 0 || b >= kBladeCount) throw std::out_of_range("blade index out of range");
  return wrap_angle(psi1_ + kBladeSpacing * b);
}

Matrix3 transform_matrix(const AzimuthState& az) {
  constexpr double k = 2.0 / 3.0;
  const auto c = az.cos_psi();
  const auto s = az.sin_psi();
  return {{{k * 0.5, k * 0.5, k * 0.5},
           {k * c[0], k * c[1], k * c[2]},
           {k * s[0], k * s[1], k * s[2]}}};
}

Matrix3 inverse_transform_matrix(const AzimuthState& az) {
  const auto c = az.cos_psi();
  const auto s = az.sin_psi();
  return {{{1.0, c[0], s[0]}, {1.0, c[1], s[1]}, {1.0, c[2], s[2]}}};
}

namespace detail {

std::array<double, 3> forward(const AzimuthState& az, const std::array<double, 3>& m) {
  const auto c = az.cos_psi();
  const auto s = az.sin_psi();
  constexpr double k = 2.0 / 3.0;
  return {(m[0] + m[1] + m[2]) / 3.0,
          k * (c[0] * m[0] + c[1] * m[1] + c[2] * m[2]),
          k * (s[0] * m[0] + s[1] * m[1] + s[2] * m[2])};
}

std::array<double, 3> inverse(const AzimuthState& az, const std::array<double, 3>& f) {
  const auto c = az.cos_psi();
  const auto s = az.sin_psi();
  std::array<double, 3> out{};
  for (int b = 0; b < kBladeCount; ++b) out[b] = f[0] + c[b] * f[1] + s[b] * f[2];
  return out;
}

}  // namespace detail

AzimuthState azimuth_advance(const AzimuthState& az, double rotor_speed, double dt) {
  if (!std::isfinite(rotor_speed) || !std::isfinite(dt)) {
    throw std::invalid_argument("azimuth_advance: non-finite rotor speed or time step");
  }
  if (dt <= 0.0) throw std::invalid_argument("azimuth_advance: dt must be positive");
  if (rotor_speed < 0.0) throw std::invalid_argument("azimuth_advance: rotor speed must be >= 0");
  return AzimuthState(az.psi1() + rotor_speed * dt);
}

}  // namespace helixwake
