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

#include "adaudit/rng.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace adaudit {

std::uint64_t Rng::poisson(double mean) {
  if (mean < 0 || !std::isfinite(mean)) {
    throw std::invalid_argument("poisson mean must be finite and >= 0");
  }
  std::uint64_t total = 0;
  // Split so each leaf mean stays small enough for exp(-m).
  while (mean > 32.0) {
    double half = mean / 2.0;
    total += poisson(half);
    mean -= half;
  }
  const double limit = std::exp(-mean);
  double product = next_double();
  std::uint64_t count = 0;
  while (product > limit) {
    ++count;
    product *= next_double();
  }
  return total + count;
}

std::vector<std::uint32_t> Rng::sample_without_replacement(std::uint32_t n,
                                                           std::uint32_t k) {
  if (k > n) throw std::invalid_argument("sample size exceeds population");
  std::set<std::uint32_t> chosen;
  if (k > n / 2) {
    // Dense case: Fisher-Yates over the full population.
    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
    shuffle(pool);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  }
  while (chosen.size() < k) chosen.insert(static_cast<std::uint32_t>(below(n)));
  return {chosen.begin(), chosen.end()};
}

ZipfSampler::ZipfSampler(std::uint32_t n, double exponent) {
  if (n == 0) throw std::invalid_argument("zipf support must be non-empty");
  cdf_.resize(n);
  double total = 0.0;
  for (std::uint32_t i = 0; i < n; ++i) {
    total += 1.0 / std::pow(static_cast<double>(i + 1), exponent);
    cdf_[i] = total;
  }
  for (auto& c : cdf_) c /= total;
  cdf_.back() = 1.0;
}

std::uint32_t ZipfSampler::sample(Rng& rng) const {
  double u = rng.next_double();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) --it;
  return static_cast<std::uint32_t>(it - cdf_.begin()) + 1;
}

double ZipfSampler::probability(std::uint32_t rank) const {
  if (rank == 0 || rank > cdf_.size()) return 0.0;
  if (rank == 1) return cdf_[0];
  return cdf_[rank - 1] - cdf_[rank - 2];
}

}  // namespace adaudit
