// SPDX-License-Identifier: Apache-2.0
#include "gobsim/rng.hpp"

#include <cmath>

namespace gobsim {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::uint64_t derive_stream(std::uint64_t master, std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = mix64(master + kGolden);
  for (std::uint64_t p : parts) {
    h = mix64(h ^ mix64(p + kGolden));
  }
  return h;
}

std::uint64_t SplitMix64::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double SplitMix64::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int SplitMix64::next_below(int n) {
  // Fixed-point scaling; bias is < 2^-53 for the small n used here.
  int v = static_cast<int>(next_unit() * static_cast<double>(n));
  return v < n ? v : n - 1;
}

double SplitMix64::next_normal(double sigma) {
  // u1 in (0,1] so the log is finite.
  double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  double u2 = next_unit();
  return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

}  // namespace gobsim
