// SPDX-License-Identifier: Apache-2.0
#include "gobsim/gob.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gobsim/jsonio.hpp"

namespace gobsim::gob {

namespace {

void check_axis(const std::vector<double>& v, double lo, double hi, const char* name) {
  if (v.empty()) {
    throw std::invalid_argument(std::string(name) + " axis is empty");
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] >= lo && v[i] <= hi)) {
      throw std::invalid_argument(std::string(name) + " angle out of range");
    }
    if (i > 0 && !(v[i] > v[i - 1])) {
      throw std::invalid_argument(std::string(name) + " angles must be pairwise distinct");
    }
  }
}

// k-combinations of the sorted axis, lexicographic by index.
std::vector<std::vector<double>> axis_combinations(const std::vector<double>& axis, int k) {
  const int n = static_cast<int>(axis.size());
  std::vector<std::vector<double>> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<double> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = axis[idx[i]];
    out.push_back(std::move(combo));
    // advance to the next combination
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<double> esb_axis(const std::vector<double>& axis, int k) {
  const int n = static_cast<int>(axis.size());
  std::vector<double> out;
  out.reserve(k);
  if (k == 1) {
    out.push_back(axis[static_cast<int>(std::lround((n - 1) / 2.0))]);
    return out;
  }
  for (int i = 0; i < k; ++i) {
    int idx = static_cast<int>(std::lround(static_cast<double>(i) * (n - 1) / (k - 1)));
    out.push_back(axis[idx]);
  }
  return out;
}

}  // namespace

GridOfBeams::GridOfBeams(std::vector<double> theta_deg, std::vector<double> phi_deg)
    : theta_(std::move(theta_deg)), phi_(std::move(phi_deg)) {
  std::sort(theta_.begin(), theta_.end());
  std::sort(phi_.begin(), phi_.end());
  check_axis(theta_, -90.0, 0.0, "elevation");
  check_axis(phi_, 0.0, 180.0, "azimuth");
}

void validate_constraint(const GridOfBeams& grid, const SubsetConstraint& c) {
  if (c.k_theta < 1 || c.k_theta > grid.n_theta()) {
    throw std::invalid_argument("k_theta outside [1, N_theta]");
  }
  if (c.k_phi < 1 || c.k_phi > grid.n_phi()) {
    throw std::invalid_argument("k_phi outside [1, N_phi]");
  }
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

SubsetEnumeration enumerate_subsets(const GridOfBeams& grid, const SubsetConstraint& c) {
  validate_constraint(grid, c);
  return SubsetEnumeration{axis_combinations(grid.theta(), c.k_theta),
                           axis_combinations(grid.phi(), c.k_phi)};
}

BeamSubset esb_select(const GridOfBeams& grid, const SubsetConstraint& c) {
  validate_constraint(grid, c);
  return BeamSubset{esb_axis(grid.theta(), c.k_theta), esb_axis(grid.phi(), c.k_phi)};
}

std::vector<Beam> beams_of(const BeamSubset& subset) {
  std::vector<Beam> beams;
  beams.reserve(subset.theta_deg.size() * subset.phi_deg.size());
  for (double t : subset.theta_deg) {
    for (double p : subset.phi_deg) {
      beams.push_back(Beam{t, p});
    }
  }
  return beams;
}

std::string to_json(const BeamSubset& subset) {
  JsonWriter w;
  w.begin_object();
  w.array_of("theta_deg", subset.theta_deg);
  w.array_of("phi_deg", subset.phi_deg);
  w.end_object();
  return w.str();
}

int subset_index(const std::vector<std::vector<double>>& enumeration,
                 const std::vector<double>& subset) {
  for (std::size_t i = 0; i < enumeration.size(); ++i) {
    if (enumeration[i] == subset) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace gobsim::gob
