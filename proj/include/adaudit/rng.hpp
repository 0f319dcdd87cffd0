// Copyright 2026 The adaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADAUDIT_RNG_HPP
#define ADAUDIT_RNG_HPP

#include <cstdint>
#include <vector>

#include "adaudit/hash.hpp"

namespace adaudit {

// xoshiro256** seeded through splitmix64. Sampling helpers are hand-rolled
// (not std::*_distribution) so that identical seeds give identical streams
// on every standard library; experiment outputs must be byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) {
      s += 0x9e3779b97f4a7c15ULL;
      w = mix64(s);
    }
  }

  // Derives an independent child generator; label keeps separate uses of
  // the same parent seed from colliding.
  Rng fork(std::uint64_t label) const {
    return Rng(mix64(state_[0] ^ mix64(label + 0x5851f42d4c957f2dULL)));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, bound) by rejection; bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [lo, hi] inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool chance(double p) { return next_double() < p; }

  // Poisson sample by Knuth's product method; large means are split in
  // halves (Poisson additivity) to keep exp(-mean) in range.
  std::uint64_t poisson(double mean);

  // Sample k distinct values from [0, n) (k <= n), ascending order.
  std::vector<std::uint32_t> sample_without_replacement(std::uint32_t n,
                                                        std::uint32_t k);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t state_[4];
};

// Zipf(s) sampler over ranks 1..n via inverse-CDF table lookup.
class ZipfSampler {
 public:
  ZipfSampler(std::uint32_t n, double exponent);
  // Returns a rank in [1, n].
  std::uint32_t sample(Rng& rng) const;
  double probability(std::uint32_t rank) const;

 private:
  std::vector<double> cdf_;
};

}  // namespace adaudit

#endif  // ADAUDIT_RNG_HPP
