// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace maskcorr {

/// Seedable random stream. Every scenario run owns exactly one; child streams
/// are derived by label so concurrent runs never share generator state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }

  /// Child stream whose seed mixes this stream's seed with the label.
  Rng derive(std::string_view label) const { return Rng(derive_seed(seed_, label)); }

  static std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
    // FNV-1a over the label, then a splitmix64 finalizer.
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : label) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    std::uint64_t z = seed ^ h;
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace maskcorr
