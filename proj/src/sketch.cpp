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

#include "adaudit/sketch.hpp"

#include <cmath>
#include <cstring>
#include <limits>

#include "adaudit/hash.hpp"

namespace adaudit {

namespace {
constexpr std::uint16_t kFormatVersion = 1;
}

SketchParams SketchParams::derive(double epsilon, double delta,
                                  std::uint64_t capacity_hint,
                                  std::uint64_t seed) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InvalidParameterError("epsilon must be in (0, 1)");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidParameterError("delta must be in (0, 1)");
  }
  if (capacity_hint == 0) {
    throw InvalidParameterError("capacity_hint must be >= 1");
  }
  SketchParams p;
  p.epsilon = epsilon;
  p.delta = delta;
  p.capacity_hint = capacity_hint;
  p.seed = seed;
  double d = std::ceil(std::log(static_cast<double>(capacity_hint) / delta));
  double w = std::ceil(std::exp(1.0) / epsilon);
  if (d < 1.0) d = 1.0;
  if (w < 1.0) w = 1.0;
  if (d > 64.0 || w > 1e9) {
    throw InvalidParameterError("sketch dimensions out of supported range");
  }
  p.depth = static_cast<std::uint32_t>(d);
  p.width = static_cast<std::uint32_t>(w);
  p.row_seeds.resize(p.depth);
  std::uint64_t s = seed;
  for (auto& rs : p.row_seeds) {
    s += 0x9e3779b97f4a7c15ULL;
    rs = mix64(s);
  }
  return p;
}

bool SketchParams::compatible_with(const SketchParams& other) const {
  return *this == other;
}

bool SketchParams::operator==(const SketchParams& other) const {
  return epsilon == other.epsilon && delta == other.delta &&
         capacity_hint == other.capacity_hint && depth == other.depth &&
         width == other.width && seed == other.seed &&
         row_seeds == other.row_seeds;
}

Bytes SketchParams::encode() const {
  Bytes out;
  append_u16le(out, kFormatVersion);
  append_f64le(out, epsilon);
  append_f64le(out, delta);
  append_u64le(out, capacity_hint);
  append_u32le(out, depth);
  append_u32le(out, width);
  append_u64le(out, seed);
  return out;
}

SketchParams SketchParams::decode(ByteReader& in) {
  std::uint16_t version;
  try {
    version = in.u16le();
  } catch (const TruncatedPayloadError&) {
    throw MalformedHeaderError("sketch header shorter than version field");
  }
  if (version != kFormatVersion) {
    throw MalformedHeaderError("unsupported sketch format version " +
                               std::to_string(version));
  }
  double epsilon, delta;
  std::uint64_t capacity_hint, seed;
  std::uint32_t depth, width;
  try {
    epsilon = in.f64le();
    delta = in.f64le();
    capacity_hint = in.u64le();
    depth = in.u32le();
    width = in.u32le();
    seed = in.u64le();
  } catch (const TruncatedPayloadError&) {
    throw MalformedHeaderError("sketch header truncated");
  }
  SketchParams p;
  try {
    p = derive(epsilon, delta, capacity_hint, seed);
  } catch (const InvalidParameterError& e) {
    throw MalformedHeaderError(std::string("sketch header invalid: ") + e.what());
  }
  if (p.depth != depth || p.width != width) {
    throw MalformedHeaderError("sketch header dimensions disagree with params");
  }
  return p;
}

std::array<std::uint8_t, 8> SketchParams::digest() const {
  Digest32 d = sha256(encode());
  std::array<std::uint8_t, 8> out;
  std::memcpy(out.data(), d.data(), 8);
  return out;
}

CountMinSketch::CountMinSketch(SketchParams params)
    : params_(std::move(params)), cells_(params_.cell_count(), 0) {}

std::size_t CountMinSketch::row_index(std::uint32_t row, AdId item) const {
  return keyed_hash64(item.value, params_.row_seeds[row]) % params_.width;
}

void CountMinSketch::update(AdId item) {
  for (std::uint32_t j = 0; j < params_.depth; ++j) {
    cells_[static_cast<std::size_t>(j) * params_.width + row_index(j, item)] += 1;
  }
}

std::uint32_t CountMinSketch::query(AdId item) const {
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  for (std::uint32_t j = 0; j < params_.depth; ++j) {
    std::uint32_t v =
        cells_[static_cast<std::size_t>(j) * params_.width + row_index(j, item)];
    if (v < best) best = v;
  }
  return best;
}

void CountMinSketch::merge_from(const CountMinSketch& other) {
  if (!params_.compatible_with(other.params_)) {
    throw IncompatibleSketchError(
        "cannot merge sketches with different params or hash seeds");
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += other.cells_[i];
}

CountMinSketch merge(const CountMinSketch& a, const CountMinSketch& b) {
  CountMinSketch out = a;
  out.merge_from(b);
  return out;
}

Bytes CountMinSketch::serialize() const {
  Bytes out = params_.encode();
  out.reserve(out.size() + payload_bytes());
  for (std::uint32_t c : cells_) append_u32le(out, c);
  return out;
}

CountMinSketch CountMinSketch::deserialize(std::span<const std::uint8_t> data) {
  ByteReader in(data);
  SketchParams p = SketchParams::decode(in);
  if (in.remaining() < p.payload_bytes()) {
    throw TruncatedPayloadError(
        "sketch payload truncated: expected " + std::to_string(p.payload_bytes()) +
        " cell bytes, have " + std::to_string(in.remaining()));
  }
  if (in.remaining() > p.payload_bytes()) {
    throw MalformedHeaderError("trailing bytes after sketch payload");
  }
  CountMinSketch s(p);
  for (auto& c : s.cells_) c = in.u32le();
  return s;
}

}  // namespace adaudit
