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

#ifndef ADAUDIT_HASH_HPP
#define ADAUDIT_HASH_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "adaudit/bytes.hpp"

namespace adaudit {

using Digest32 = std::array<std::uint8_t, 32>;

Digest32 sha256(std::span<const std::uint8_t> data);
Digest32 sha256(std::string_view data);

// 64-bit finalizer with full avalanche (splitmix64 core).
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// Seeded keyed hash of a 64-bit key. Distinct seeds give independently
// mixed functions; used for the sketch's row hash family.
constexpr std::uint64_t keyed_hash64(std::uint64_t key, std::uint64_t seed) {
  return mix64(key + mix64(seed + 0x9e3779b97f4a7c15ULL));
}

// Deterministic byte stream: SHA-256 in counter mode over (seed material,
// label, counter). Used wherever crypto-quality deterministic bytes are
// needed from a compact seed (key generation, full-domain hashing).
class HashStream {
 public:
  HashStream(std::span<const std::uint8_t> seed_material, std::string_view label);
  HashStream(std::uint64_t seed, std::string_view label);

  void fill(std::span<std::uint8_t> out);
  Bytes next(std::size_t n);

 private:
  Bytes prefix_;  // seed material || label
  std::uint64_t counter_ = 0;
  Digest32 block_{};
  std::size_t block_used_ = 32;  // forces refill on first use
};

// Expands a 32-byte key into a deterministic 32-bit-word keystream
// (ChaCha20, zero nonce, block counter from 0). out words are the
// little-endian interpretation of the keystream bytes.
void keystream_u32(const Digest32& key, std::span<std::uint32_t> out);

}  // namespace adaudit

#endif  // ADAUDIT_HASH_HPP
