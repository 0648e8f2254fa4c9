// SPDX-License-Identifier: Apache-2.0
#ifndef GOBSIM_GOB_HPP
#define GOBSIM_GOB_HPP

#include <string>
#include <vector>

namespace gobsim::gob {

struct Beam {
  double theta_deg;  // elevation of maximum gain, downtilt negative
  double phi_deg;    // azimuth of maximum gain

  bool operator==(const Beam&) const = default;
};

// Full grid-of-beams codebook, described by its elevation and azimuth
// angle sets. Angles are stored sorted ascending and must be pairwise
// distinct. Immutable after construction; safe to share across threads.
class GridOfBeams {
 public:
  // Sorts and validates. Elevations must lie in [-90, 0] (downtilt
  // convention), azimuths in [0, 180].
  GridOfBeams(std::vector<double> theta_deg, std::vector<double> phi_deg);

  const std::vector<double>& theta() const { return theta_; }
  const std::vector<double>& phi() const { return phi_; }
  int n_theta() const { return static_cast<int>(theta_.size()); }
  int n_phi() const { return static_cast<int>(phi_.size()); }
  int n_beams() const { return n_theta() * n_phi(); }

 private:
  std::vector<double> theta_;
  std::vector<double> phi_;
};

// Per-axis subset sizes for the constrained codebook.
struct SubsetConstraint {
  int k_theta = 1;
  int k_phi = 1;

  int k_beams() const { return k_theta * k_phi; }
};

// Throws std::invalid_argument when the constraint does not fit the grid.
void validate_constraint(const GridOfBeams& grid, const SubsetConstraint& c);

// A chosen subset of the codebook axes, angles sorted ascending.
struct BeamSubset {
  std::vector<double> theta_deg;
  std::vector<double> phi_deg;

  bool operator==(const BeamSubset&) const = default;
};

struct SubsetEnumeration {
  std::vector<std::vector<double>> theta_subsets;  // size L = C(N_theta, K_theta)
  std::vector<std::vector<double>> phi_subsets;    // size M = C(N_phi, K_phi)
};

// All k-combinations per axis, in lexicographic order over the sorted
// angle lists. The order is part of the contract: action indices derive
// their meaning from it.
SubsetEnumeration enumerate_subsets(const GridOfBeams& grid, const SubsetConstraint& c);

// Number of k-combinations of n elements (small n only).
long long binomial(int n, int k);

// Equally spaced beams: per axis, picks k indices spread evenly across
// the sorted angle list. For k = 1 the middle element is used, otherwise
// index_i = round(i * (n-1) / (k-1)) with endpoints included.
BeamSubset esb_select(const GridOfBeams& grid, const SubsetConstraint& c);

// Cartesian product of the subset axes, theta-major.
std::vector<Beam> beams_of(const BeamSubset& subset);

// Ordered angle arrays, e.g. {"theta_deg":[-45],"phi_deg":[0,90,180]}.
std::string to_json(const BeamSubset& subset);

// Position of an axis subset within the enumeration, or -1.
int subset_index(const std::vector<std::vector<double>>& enumeration,
                 const std::vector<double>& subset);

}  // namespace gobsim::gob

#endif
