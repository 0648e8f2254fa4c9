// SPDX-License-Identifier: Apache-2.0
#ifndef GOBSIM_RNG_HPP
#define GOBSIM_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace gobsim {

// SplitMix64 finalizer. Used both as the generator step and to derive
// independent child streams from labelled parts.
std::uint64_t mix64(std::uint64_t x);

// FNV-1a 64-bit, for hashing string labels into stream derivation parts.
std::uint64_t fnv1a64(std::string_view s);

// Derives a child stream seed from a master seed and a list of parts
// (strategy id hash, n_ue, seed index, round index, ...). Adding a new
// part combination never perturbs draws of existing ones.
std::uint64_t derive_stream(std::uint64_t master, std::initializer_list<std::uint64_t> parts);

// Small deterministic generator with explicit state. The standard
// <random> distributions are implementation-defined, so uniform and
// normal transforms are done by hand to keep result files identical
// across standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53-bit resolution.
  double next_unit();

  // Uniform integer in [0, n), n >= 1.
  int next_below(int n);

  // N(0, sigma) via Box-Muller; consumes two draws per call and never
  // caches the spare value, so the stream position is predictable.
  double next_normal(double sigma);

  std::uint64_t state() const { return state_; }
  void set_state(std::uint64_t s) { state_ = s; }

 private:
  std::uint64_t state_;
};

}  // namespace gobsim

#endif
