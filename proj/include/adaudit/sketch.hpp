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

#ifndef ADAUDIT_SKETCH_HPP
#define ADAUDIT_SKETCH_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "adaudit/bytes.hpp"

namespace adaudit {

// Pseudorandom ad identifier in [1, a_size], produced by the keyed URL
// mapping. Sketches count occurrences of these.
struct AdId {
  std::uint64_t value = 0;
  auto operator<=>(const AdId&) const = default;
};

// Dimensioning and hash family of a count-min sketch.
//
//   depth = ceil(ln(capacity_hint / delta)),  width = ceil(e / epsilon)
//
// capacity_hint is the expected number of distinct elements; all parties in
// an aggregation round must share identical params (including seed) or their
// sketches cannot be summed cell-wise.
struct SketchParams {
  double epsilon = 0;
  double delta = 0;
  std::uint64_t capacity_hint = 0;
  std::uint32_t depth = 0;
  std::uint32_t width = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> row_seeds;  // derived from seed, one per row

  // Validates ranges, derives depth/width and the per-row hash seeds.
  static SketchParams derive(double epsilon, double delta,
                             std::uint64_t capacity_hint, std::uint64_t seed);

  bool compatible_with(const SketchParams& other) const;
  std::size_t cell_count() const {
    return static_cast<std::size_t>(depth) * width;
  }
  std::size_t payload_bytes() const { return cell_count() * 4; }

  // 8-byte digest of the serialized header; identifies the shape+hash
  // family in report headers.
  std::array<std::uint8_t, 8> digest() const;

  Bytes encode() const;
  static SketchParams decode(ByteReader& in);

  bool operator==(const SketchParams& other) const;
};

// Count-min sketch over 32-bit counters with mod-2^32 cell arithmetic.
// Blinded and plain sketches share this representation: adding masks and
// adding counts are the same ring operation, so unblinding cancels exactly.
class CountMinSketch {
 public:
  explicit CountMinSketch(SketchParams params);

  static CountMinSketch make(double epsilon, double delta,
                             std::uint64_t capacity_hint, std::uint64_t seed) {
    return CountMinSketch(SketchParams::derive(epsilon, delta, capacity_hint, seed));
  }

  const SketchParams& params() const { return params_; }

  void update(AdId item);
  std::uint32_t query(AdId item) const;

  // Cell-wise sum mod 2^32; throws IncompatibleSketchError unless params and
  // hash seeds match exactly.
  void merge_from(const CountMinSketch& other);

  std::span<const std::uint32_t> cells() const { return cells_; }
  std::span<std::uint32_t> cells_mut() { return cells_; }

  std::size_t payload_bytes() const { return params_.payload_bytes(); }

  // Header (version, epsilon, delta, capacity hint, depth, width, seed)
  // followed by the cells, little-endian 32-bit, row-major.
  Bytes serialize() const;
  static CountMinSketch deserialize(std::span<const std::uint8_t> data);

  bool operator==(const CountMinSketch& other) const {
    return params_ == other.params_ && cells_ == other.cells_;
  }

 private:
  std::size_t row_index(std::uint32_t row, AdId item) const;

  SketchParams params_;
  std::vector<std::uint32_t> cells_;  // row-major depth x width
};

CountMinSketch merge(const CountMinSketch& a, const CountMinSketch& b);

}  // namespace adaudit

#endif  // ADAUDIT_SKETCH_HPP
