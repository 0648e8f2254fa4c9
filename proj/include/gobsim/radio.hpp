// SPDX-License-Identifier: Apache-2.0
#ifndef GOBSIM_RADIO_HPP
#define GOBSIM_RADIO_HPP

#include "gobsim/gob.hpp"

namespace gobsim::radio {

// Uniform planar array at the gNB; rows scan elevation, columns azimuth.
struct AntennaConfig {
  int rows = 4;
  int cols = 32;
  double element_gain_dBi = 8.0;
  double sidelobe_floor_dB = -50.0;  // attenuation clamp relative to peak

  double max_gain_dBi() const;
  double beamwidth_theta_deg() const;  // 102/N approximation
  double beamwidth_phi_deg() const;
};

struct LinkBudgetConfig {
  double carrier_GHz = 28.0;
  double bandwidth_MHz = 100.0;
  double noise_figure_dB = 7.0;
  double ue_height_m = 1.5;
  double gnb_height_m = 25.0;
  double shadowing_sigma_los_dB = 4.0;
  double shadowing_sigma_nlos_dB = 6.0;

  double bandwidth_Hz() const { return bandwidth_MHz * 1e6; }
};

void validate(const AntennaConfig& a);
void validate(const LinkBudgetConfig& c);

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Direction and distances from the gNB to a UE.
struct UeGeometry {
  double distance2d_m = 0.0;
  double distance3d_m = 0.0;
  double elevation_deg = 0.0;  // in [-90, 0] for a UE below the gNB
  double azimuth_deg = 0.0;    // in [0, 180] over the served half-plane
};

UeGeometry ue_geometry(const Vec3& gnb, const Vec3& ue);

// Gaussian main lobe with a sidelobe floor:
//   G = Gmax - min(12 [(dTheta/BWt)^2 + (dPhi/BWp)^2], |floor|)
double beam_gain_dBi(const AntennaConfig& antenna, const gob::Beam& beam,
                     double elevation_deg, double azimuth_deg);

// 3GPP TR 38.901 UMa pathloss (below the breakpoint distance), plus the
// caller-supplied shadow fading draw. NLOS is lower-bounded by LOS.
double pathloss_dB(const LinkBudgetConfig& cfg, double distance3d_m, bool los,
                   double shadow_draw_dB);

// UMa LOS probability (TR 38.901 Table 7.4.2-1, UE below 13 m).
double los_probability(double distance2d_m);

// Thermal noise floor: -174 dBm/Hz + 10 log10(BW) + NF.
double noise_floor_dBm(const LinkBudgetConfig& cfg);

// Single-gNB downlink: no interference term, SINR equals SNR.
double sinr_dB(const LinkBudgetConfig& cfg, const AntennaConfig& antenna,
               double tx_power_dBm, const gob::Beam& beam, const UeGeometry& geometry,
               double pathloss_dB_value);

}  // namespace gobsim::radio

#endif
