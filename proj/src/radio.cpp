// SPDX-License-Identifier: Apache-2.0
#include "gobsim/radio.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gobsim::radio {

namespace {
constexpr double kRadToDeg = 57.295779513082320876798154814105;
}

double AntennaConfig::max_gain_dBi() const {
  return element_gain_dBi + 10.0 * std::log10(static_cast<double>(rows) * cols);
}

double AntennaConfig::beamwidth_theta_deg() const { return 102.0 / rows; }

double AntennaConfig::beamwidth_phi_deg() const { return 102.0 / cols; }

void validate(const AntennaConfig& a) {
  if (a.rows < 1 || a.cols < 1) {
    throw std::invalid_argument("antenna array needs at least one element per axis");
  }
  if (!(a.sidelobe_floor_dB < 0.0)) {
    throw std::invalid_argument("sidelobe floor must be negative");
  }
}

void validate(const LinkBudgetConfig& c) {
  if (!(c.carrier_GHz > 6.0 && c.carrier_GHz <= 100.0)) {
    throw std::invalid_argument("carrier frequency outside (6, 100] GHz");
  }
  if (!(c.bandwidth_MHz > 0.0) || !(c.noise_figure_dB > 0.0) || !(c.ue_height_m > 0.0) ||
      !(c.gnb_height_m > 0.0) || !(c.shadowing_sigma_los_dB > 0.0) ||
      !(c.shadowing_sigma_nlos_dB > 0.0)) {
    throw std::invalid_argument("link budget parameters must be positive");
  }
}

UeGeometry ue_geometry(const Vec3& gnb, const Vec3& ue) {
  const double dx = ue.x - gnb.x;
  const double dy = ue.y - gnb.y;
  const double dz = ue.z - gnb.z;
  UeGeometry g;
  g.distance2d_m = std::hypot(dx, dy);
  g.distance3d_m = std::hypot(g.distance2d_m, dz);
  // A UE straight below the mast has no defined azimuth; broadside is used.
  g.azimuth_deg = g.distance2d_m > 0.0 ? std::atan2(dy, dx) * kRadToDeg : 90.0;
  g.azimuth_deg = std::clamp(g.azimuth_deg, 0.0, 180.0);
  g.elevation_deg = std::atan2(dz, g.distance2d_m) * kRadToDeg;
  g.elevation_deg = std::clamp(g.elevation_deg, -90.0, 0.0);
  return g;
}

double beam_gain_dBi(const AntennaConfig& antenna, const gob::Beam& beam,
                     double elevation_deg, double azimuth_deg) {
  const double dt = (elevation_deg - beam.theta_deg) / antenna.beamwidth_theta_deg();
  const double dp = (azimuth_deg - beam.phi_deg) / antenna.beamwidth_phi_deg();
  const double attenuation = std::min(12.0 * (dt * dt + dp * dp), -antenna.sidelobe_floor_dB);
  return antenna.max_gain_dBi() - attenuation;
}

double pathloss_dB(const LinkBudgetConfig& cfg, double distance3d_m, bool los,
                   double shadow_draw_dB) {
  if (!(distance3d_m > 0.0)) {
    throw std::domain_error("pathloss requires a positive 3D distance");
  }
  // TR 38.901 Table 7.4.1-1, UMa PL1 (the desk-scale cell stays below the
  // breakpoint distance).
  const double pl_los =
      28.0 + 22.0 * std::log10(distance3d_m) + 20.0 * std::log10(cfg.carrier_GHz);
  if (los) {
    return pl_los + shadow_draw_dB;
  }
  const double pl_nlos = 13.54 + 39.08 * std::log10(distance3d_m) +
                         20.0 * std::log10(cfg.carrier_GHz) - 0.6 * (cfg.ue_height_m - 1.5);
  return std::max(pl_los, pl_nlos) + shadow_draw_dB;
}

double los_probability(double distance2d_m) {
  if (distance2d_m < 0.0) {
    throw std::domain_error("negative 2D distance");
  }
  if (distance2d_m <= 18.0) return 1.0;
  const double p = 18.0 / distance2d_m +
                   std::exp(-distance2d_m / 63.0) * (1.0 - 18.0 / distance2d_m);
  return std::clamp(p, 0.0, 1.0);
}

double noise_floor_dBm(const LinkBudgetConfig& cfg) {
  return -174.0 + 10.0 * std::log10(cfg.bandwidth_Hz()) + cfg.noise_figure_dB;
}

double sinr_dB(const LinkBudgetConfig& cfg, const AntennaConfig& antenna,
               double tx_power_dBm, const gob::Beam& beam, const UeGeometry& geometry,
               double pathloss_dB_value) {
  const double gain = beam_gain_dBi(antenna, beam, geometry.elevation_deg, geometry.azimuth_deg);
  return tx_power_dBm + gain - pathloss_dB_value - noise_floor_dBm(cfg);
}

}  // namespace gobsim::radio
