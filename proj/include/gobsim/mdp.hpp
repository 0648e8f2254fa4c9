// SPDX-License-Identifier: Apache-2.0
#ifndef GOBSIM_MDP_HPP
#define GOBSIM_MDP_HPP

#include <vector>

namespace gobsim::mdp {

// Per-UE SINR report, quantized and truncated to the integer range [0, 10].
struct StateVector {
  std::vector<int> gamma_hat;

  int n_ue() const { return static_cast<int>(gamma_hat.size()); }
  bool operator==(const StateVector&) const = default;
};

// 0 for gamma <= 0, 10 for gamma >= 10, otherwise round to nearest with
// halves away from zero. NaN is rejected.
int quantize_sinr(double gamma_dB);

StateVector quantize_state(const std::vector<double>& sinr_dB);

// Sizes of the three action axes: elevation subsets, azimuth subsets,
// power deltas.
struct ActionDims {
  int n_theta_subsets = 1;  // L
  int n_phi_subsets = 1;    // M
  int n_power_deltas = 1;   // N_P

  int total() const { return n_theta_subsets * n_phi_subsets * n_power_deltas; }
};

// One joint action, 1-based per axis.
struct BeamAction {
  int l = 1;  // elevation subset index in [1, L]
  int m = 1;  // azimuth subset index in [1, M]
  int n = 1;  // power delta index in [1, N_P]

  bool operator==(const BeamAction&) const = default;
};

// Bijection between (l, m, n) and a flat index in [0, L*M*N_P),
// l-major, then m, then n. Throws std::domain_error on out-of-range input.
int encode_action(const BeamAction& a, const ActionDims& dims);
BeamAction decode_action(int flat_index, const ActionDims& dims);

// Baseline transmit power plus the selectable delta set.
struct PowerLevels {
  double baseline_dBm = 35.0;
  std::vector<double> deltas_dB{-3.0, -1.5, 0.0, 1.5, 3.0};

  int n_deltas() const { return static_cast<int>(deltas_dB.size()); }
  double power_dBm(int n) const;  // n is the 1-based delta index
  double min_power_dBm() const;
};

// Fraction of UEs with quantized SINR at or below the threshold.
double outage_ratio(const StateVector& state, int threshold);

// Reward r = ee/ee_max - omega_c * outage, kept decomposed for audit.
struct RewardBreakdown {
  double ee_bps_per_W = 0.0;
  double ee_max_bps_per_W = 0.0;
  double outage = 0.0;
  double omega_c = 0.0;
  double reward = 0.0;
};

RewardBreakdown compute_reward(double ee_bps_per_W, double ee_max_bps_per_W,
                               double outage, double omega_c);

}  // namespace gobsim::mdp

#endif
