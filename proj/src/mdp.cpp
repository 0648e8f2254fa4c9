// SPDX-License-Identifier: Apache-2.0
#include "gobsim/mdp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gobsim::mdp {

int quantize_sinr(double gamma_dB) {
  if (std::isnan(gamma_dB)) {
    throw std::domain_error("SINR is NaN");
  }
  if (gamma_dB <= 0.0) return 0;
  if (gamma_dB >= 10.0) return 10;
  return static_cast<int>(std::lround(gamma_dB));
}

StateVector quantize_state(const std::vector<double>& sinr_dB) {
  StateVector s;
  s.gamma_hat.reserve(sinr_dB.size());
  for (double g : sinr_dB) s.gamma_hat.push_back(quantize_sinr(g));
  return s;
}

int encode_action(const BeamAction& a, const ActionDims& dims) {
  if (a.l < 1 || a.l > dims.n_theta_subsets || a.m < 1 || a.m > dims.n_phi_subsets ||
      a.n < 1 || a.n > dims.n_power_deltas) {
    throw std::domain_error("action component out of range");
  }
  return (a.l - 1) * dims.n_phi_subsets * dims.n_power_deltas +
         (a.m - 1) * dims.n_power_deltas + (a.n - 1);
}

BeamAction decode_action(int flat_index, const ActionDims& dims) {
  if (flat_index < 0 || flat_index >= dims.total()) {
    throw std::domain_error("flat action index out of range");
  }
  BeamAction a;
  a.n = flat_index % dims.n_power_deltas + 1;
  const int lm = flat_index / dims.n_power_deltas;
  a.m = lm % dims.n_phi_subsets + 1;
  a.l = lm / dims.n_phi_subsets + 1;
  return a;
}

double PowerLevels::power_dBm(int n) const {
  if (n < 1 || n > n_deltas()) {
    throw std::domain_error("power delta index out of range");
  }
  return baseline_dBm + deltas_dB[n - 1];
}

double PowerLevels::min_power_dBm() const {
  return baseline_dBm + *std::min_element(deltas_dB.begin(), deltas_dB.end());
}

double outage_ratio(const StateVector& state, int threshold) {
  if (threshold < 0 || threshold > 10) {
    throw std::domain_error("outage threshold outside [0, 10]");
  }
  if (state.gamma_hat.empty()) return 0.0;
  int n_out = 0;
  for (int g : state.gamma_hat) {
    if (g <= threshold) ++n_out;
  }
  return static_cast<double>(n_out) / static_cast<double>(state.gamma_hat.size());
}

RewardBreakdown compute_reward(double ee_bps_per_W, double ee_max_bps_per_W,
                               double outage, double omega_c) {
  RewardBreakdown r;
  r.ee_bps_per_W = ee_bps_per_W;
  r.ee_max_bps_per_W = ee_max_bps_per_W;
  r.outage = outage;
  r.omega_c = omega_c;
  r.reward = ee_bps_per_W / ee_max_bps_per_W - omega_c * outage;
  return r;
}

}  // namespace gobsim::mdp
