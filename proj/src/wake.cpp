#include "helixwake/wake.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace helixwake {

WakeGridConfig WakeGridConfig::for_diameter(double diameter, double dt) {
  WakeGridConfig g;
  g.x_extent = 8.0 * diameter;
  g.cross_y = 2.0 * diameter;
  g.cross_z = 2.0 * diameter;
  g.dt = dt;
  return g;
}

void WakeGridConfig::validate(double wind_speed) const {
  if (!(x_extent > 0.0) || !(cross_y > 0.0) || !(cross_z > 0.0)) {
    throw std::invalid_argument("wake grid extents must be positive");
  }
  if (nx < 16 || ny < 16 || nz < 16) {
    throw std::invalid_argument("wake grid needs at least 16 cells per axis");
  }
  if (!(dt > 0.0)) throw std::invalid_argument("wake dt must be positive");
  if (wind_speed * dt > dx()) {
    throw std::invalid_argument("wake grid violates the advective CFL bound U dt <= dx");
  }
}

void WakeModelParams::validate() const {
  if (!std::isfinite(deflection_gain)) throw std::invalid_argument("deflection_gain must be finite");
  if (recovery_base < 0 || recovery_ti < 0 || expansion_base < 0 || expansion_ti < 0) {
    throw std::invalid_argument("wake recovery/expansion rates must be >= 0");
  }
  if (mixing_gain < 0 || vertical_mixing_weight < 0 || axial_mixing_weight < 0) {
    throw std::invalid_argument("mixing gain and weights must be >= 0");
  }
  if (!(mixing_window > 0.0)) throw std::invalid_argument("mixing window must be positive");
}

double axial_induction(double ct) {
  const double c = std::clamp(ct, 0.0, 1.0);
  return 0.5 * (1.0 - std::sqrt(1.0 - c));
}

namespace {

double lerp(double a, double b, double w) { return a + (b - a) * w; }

}  // namespace

void WakeState::evolve(Parcel& p, double x, double dt) const {
  p.y += p.vy * dt;
  p.z += p.vz * dt;
  const double boost = 1.0 + model_.mixing_gain * mixing_at(x);
  const double travel = u_adv_ * dt;
  const double grow = travel * (model_.expansion_base + model_.expansion_ti * ti_) * boost;
  if (grow > 0.0) {
    const double s_new = p.sigma + grow;
    if (model_.spreading_conserves_deficit) {
      const double r = p.sigma / s_new;
      p.deficit *= r * r;
    }
    p.sigma = s_new;
  }
  const double rate = (model_.recovery_base + model_.recovery_ti * ti_) * boost / diameter_;
  p.deficit *= std::exp(-rate * travel);
}

double WakeState::mixing_at(double x) const {
  if (stations_.empty()) return 0.0;
  const double dx = grid_.dx();
  const double f = std::clamp(x / dx, 0.0, static_cast<double>(stations_.size() - 1));
  const auto i = std::min(static_cast<std::size_t>(f), stations_.size() - 2);
  return lerp(stations_[i].mixing, stations_[i + 1].mixing, f - static_cast<double>(i));
}

void WakeState::resample_stations() {
  const double spacing = u_adv_ * grid_.dt;
  const double last = static_cast<double>(parcels_.size() - 1);
  for (auto& st : stations_) {
    const double f = std::min(st.x / spacing, last);
    const auto j = std::min(static_cast<std::size_t>(f), parcels_.size() - 2);
    const double w = f - static_cast<double>(j);
    const Parcel& a = parcels_[j];
    const Parcel& b = parcels_[j + 1];
    st.y_c = lerp(a.y, b.y, w);
    st.z_c = lerp(a.z, b.z, w);
    st.deficit = lerp(a.deficit, b.deficit, w);
    st.sigma = lerp(a.sigma, b.sigma, w);
  }
}

double WakeState::Channel::rms_excursion(double n) const {
  const double m = sum / n;
  return std::sqrt(std::max(0.0, sum2 / n - m * m));
}

double WakeState::Channel::rms_rate(double n) const {
  return std::sqrt(std::max(0.0, sum_rate2 / n));
}

void WakeState::update_mixing(double dt) {
  const bool full = filled_ == window_;
  const bool rebuild = steps_ % static_cast<long>(window_) == 0;
  for (std::size_t i = 0; i < stations_.size(); ++i) {
    const auto& st = stations_[i];
    const std::array<double, 3> now{st.y_c, st.z_c, st.deficit};
    for (std::size_t c = 0; c < now.size(); ++c) {
      auto& ch = history_[i][c];
      const double rate = steps_ == 0 ? 0.0 : (now[c] - ch.last) / dt;
      ch.last = now[c];
      if (full) {
        ch.sum -= ch.value[head_];
        ch.sum2 -= ch.value[head_] * ch.value[head_];
        ch.sum_rate2 -= ch.rate2[head_];
      }
      ch.value[head_] = now[c];
      ch.rate2[head_] = rate * rate;
      ch.sum += now[c];
      ch.sum2 += now[c] * now[c];
      ch.sum_rate2 += rate * rate;
      if (rebuild) {
        // drop accumulated rounding from the running sums
        ch.sum = ch.sum2 = ch.sum_rate2 = 0.0;
        const std::size_t n = std::min(filled_ + 1, window_);
        for (std::size_t k = 0; k < n; ++k) {
          ch.sum += ch.value[k];
          ch.sum2 += ch.value[k] * ch.value[k];
          ch.sum_rate2 += ch.rate2[k];
        }
      }
    }
  }
  head_ = (head_ + 1) % window_;
  filled_ = std::min(filled_ + 1, window_);

  const double n = static_cast<double>(filled_);
  const double U = wind_speed_;
  for (std::size_t i = 0; i < stations_.size(); ++i) {
    const auto& [hy, hz, hd] = history_[i];
    // meander diffusivity: RMS crossflow speed times RMS excursion
    double nu = hy.rms_rate(n) * hy.rms_excursion(n) +
                model_.vertical_mixing_weight * hz.rms_rate(n) * hz.rms_excursion(n);
    // pulsing: u'^2 / omega with omega = rms(du'/dt) / rms(u')
    const double pulse_rate = hd.rms_rate(n);
    if (pulse_rate > 0.0) {
      const double u_rms = U * hd.rms_excursion(n);
      nu += model_.axial_mixing_weight * u_rms * u_rms * u_rms / (U * pulse_rate);
    }
    stations_[i].mixing = nu / (U * sigma0_);
  }
}

StationRecord WakeState::at(double x) const {
  if (!(x >= 0.0) || x > grid_.x_extent * (1.0 + 1e-12)) {
    throw std::out_of_range("wake station query outside [0, x_extent]");
  }
  const double f = std::min(x / grid_.dx(), static_cast<double>(stations_.size() - 1));
  const auto i = std::min(static_cast<std::size_t>(f), stations_.size() - 2);
  const double w = f - static_cast<double>(i);
  const auto& a = stations_[i];
  const auto& b = stations_[i + 1];
  return {x,
          lerp(a.y_c, b.y_c, w),
          lerp(a.z_c, b.z_c, w),
          lerp(a.deficit, b.deficit, w),
          lerp(a.sigma, b.sigma, w),
          lerp(a.mixing, b.mixing, w)};
}

double WakeState::axial_velocity(double x, double y, double z) const {
  const auto st = at(x);
  const double dy = y - st.y_c;
  const double dz = z - st.z_c;
  const double g = std::exp(-(dy * dy + dz * dz) / (2.0 * st.sigma * st.sigma));
  return wind_speed_ * (1.0 - st.deficit * g);
}

std::vector<double> WakeState::velocity_field() const {
  std::vector<double> out;
  out.reserve(stations_.size() * static_cast<std::size_t>(grid_.ny * grid_.nz));
  for (const auto& st : stations_) {
    const auto s = slice(*this, st.x / diameter_);
    out.insert(out.end(), s.u.begin(), s.u.end());
  }
  return out;
}

WakeState init_wake(const WakeGridConfig& grid, const TurbineParams& params,
                    const FlowConditions& flow, const WakeModelParams& model) {
  params.validate();
  flow.validate();
  model.validate();
  grid.validate(flow.wind_speed);

  WakeState s;
  s.grid_ = grid;
  s.model_ = model;
  s.diameter_ = params.diameter;
  s.wind_speed_ = flow.wind_speed;
  s.ti_ = flow.turbulence_intensity;
  s.q_area_ = flow.dynamic_pressure() * params.area();
  s.u_adv_ = flow.wind_speed * (1.0 - axial_induction(params.baseline_ct));
  s.sigma0_ = params.diameter / std::sqrt(8.0);
  s.tau_ = params.diameter / flow.wind_speed;
  s.window_ = std::max<std::size_t>(2, static_cast<std::size_t>(std::lround(model.mixing_window / grid.dt)));

  s.stations_.resize(static_cast<std::size_t>(grid.nx) + 1);
  for (std::size_t i = 0; i < s.stations_.size(); ++i) {
    s.stations_[i].x = static_cast<double>(i) * grid.dx();
  }
  s.history_.resize(s.stations_.size());
  for (auto& h : s.history_) {
    for (auto& ch : h) {
      ch.value.assign(s.window_, 0.0);
      ch.rate2.assign(s.window_, 0.0);
    }
  }

  const double spacing = s.u_adv_ * grid.dt;
  const auto n_parcels = static_cast<std::size_t>(std::ceil(grid.x_extent / spacing)) + 2;
  WakeState::Parcel p;
  p.deficit = 2.0 * axial_induction(params.baseline_ct);
  p.sigma = s.sigma0_;
  for (std::size_t j = 0; j < n_parcels; ++j) {
    s.parcels_.push_back(p);
    s.evolve(p, static_cast<double>(j) * spacing, grid.dt);
  }
  s.resample_stations();
  return s;
}

void step_wake(WakeState& s, const TurbineSample& sample, double dt) {
  if (std::abs(sample.t - s.time_) > 1e-6 * std::max(1.0, s.time_)) {
    throw std::invalid_argument("step_wake: turbine sample time does not match wake clock");
  }
  if (std::abs(dt - s.grid_.dt) > 1e-12 * s.grid_.dt) {
    throw std::invalid_argument("step_wake: dt differs from the wake grid dt");
  }

  // normalized fixed-frame moments; blade psi = pi/2 points to -y seen from upstream
  const double norm = s.q_area_ * s.diameter_ / 8.0;
  const double m_tilt = sample.tilt_moment / norm;
  const double m_yaw = sample.yaw_moment / norm;
  const double gain = s.model_.deflection_gain * s.wind_speed_;
  const double alpha = 1.0 - std::exp(-dt / s.tau_);
  s.vz_ += (gain * m_tilt - s.vz_) * alpha;
  s.vy_ += (-gain * m_yaw - s.vy_) * alpha;

  const double spacing = s.u_adv_ * dt;
  for (std::size_t j = 0; j < s.parcels_.size(); ++j) {
    s.evolve(s.parcels_[j], static_cast<double>(j) * spacing, dt);
  }

  WakeState::Parcel fresh;
  fresh.vy = s.vy_;
  fresh.vz = s.vz_;
  fresh.deficit = 2.0 * axial_induction(sample.thrust / s.q_area_);
  fresh.sigma = s.sigma0_;
  s.parcels_.push_front(fresh);
  s.parcels_.pop_back();

  s.resample_stations();
  s.update_mixing(dt);
  ++s.steps_;
  s.time_ = static_cast<double>(s.steps_) * dt;
}

std::pair<double, double> centerline(const WakeState& state, double x) {
  const auto st = state.at(x);
  return {st.y_c, st.z_c};
}

SliceField slice(const WakeState& state, double x_over_d) {
  const auto& g = state.grid();
  const auto st = state.at(x_over_d * state.diameter());
  SliceField f;
  f.x_over_d = x_over_d;
  f.ny = g.ny;
  f.nz = g.nz;
  f.dy = g.dy();
  f.dz = g.dz();
  f.y0 = -0.5 * g.cross_y;
  f.z0 = -0.5 * g.cross_z;
  f.u.resize(static_cast<std::size_t>(g.ny) * g.nz);
  const double inv = 1.0 / (2.0 * st.sigma * st.sigma);
  const double U = state.wind_speed();
  for (int k = 0; k < g.nz; ++k) {
    const double dz = f.z(k) - st.z_c;
    for (int j = 0; j < g.ny; ++j) {
      const double dy = f.y(j) - st.y_c;
      f.at(j, k) = U * (1.0 - st.deficit * std::exp(-(dy * dy + dz * dz) * inv));
    }
  }
  return f;
}

}  // namespace helixwake
