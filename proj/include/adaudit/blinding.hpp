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

#ifndef ADAUDIT_BLINDING_HPP
#define ADAUDIT_BLINDING_HPP

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "adaudit/group.hpp"
#include "adaudit/sketch.hpp"

namespace adaudit {

// Identifies one aggregation round. retry is 0 for the initial report and
// is bumped for the fault-tolerance round so adjusted masks never reuse the
// original ones.
struct RoundTag {
  std::uint64_t round = 0;
  std::uint32_t retry = 0;
  auto operator<=>(const RoundTag&) const = default;
};

struct UserKeyPair {
  std::uint32_t index = 0;  // 1-based roster position
  Bytes private_scalar;
  Bytes public_element;
};

// Ordered public-key roster; indices must be 1..N with no gaps and all
// parties must use the identical ordering within a round.
struct Roster {
  struct Entry {
    std::uint32_t index;
    Bytes public_element;
  };
  std::vector<Entry> entries;

  std::size_t size() const { return entries.size(); }
  bool contains(std::uint32_t index) const {
    return index >= 1 && index <= entries.size();
  }
  const Bytes& public_of(std::uint32_t index) const;
  void validate() const;  // throws IndexNotInRosterError on gaps/disorder
};

// Per-user additive share of zero: one 32-bit residue per sketch cell.
// Summed over a complete roster, every position cancels to 0 mod 2^32.
struct BlindingVector {
  RoundTag tag;
  std::vector<std::uint32_t> values;
};

// Blinded sketch report as it crosses the wire: masked cells plus enough
// header to check round and shape. Carries no URLs and no plain counts.
struct BlindedReport {
  RoundTag tag;
  std::uint32_t user_index = 0;
  std::array<std::uint8_t, 8> params_digest{};
  std::uint32_t depth = 0;
  std::uint32_t width = 0;
  std::vector<std::uint32_t> cells;

  bool operator==(const BlindedReport&) const = default;
};

// Deterministic keypair from a seed: scalar derived by hashing, public
// element g^scalar. index is the caller-assigned roster position.
UserKeyPair keygen(const DhGroup& group, std::uint64_t seed, std::uint32_t index = 0);

// Byte encoding of other_public^my_private. Symmetric in the pair:
// pair_secret(u_i, y_j) == pair_secret(u_j, y_i).
Bytes pair_secret(const DhGroup& group, const UserKeyPair& me,
                  const Bytes& other_public);

// Mask contribution of one peer pair for a given round: cell m gets word m
// of a ChaCha20 keystream keyed by SHA-256(pair secret, round, retry) — a
// keyed PRF truncated to 32 bits.
void pairwise_mask(const Bytes& secret, RoundTag tag,
                   std::span<std::uint32_t> out);

// b_i[m] = sum over peers j != i (skipping `missing`) of the pairwise mask,
// with sign +1 when i > j and -1 otherwise. For a complete roster the
// vectors of all users sum to zero in every cell.
BlindingVector blinding_vector(const DhGroup& group, const UserKeyPair& me,
                               const Roster& roster, std::size_t cell_count,
                               RoundTag tag,
                               const std::set<std::uint32_t>& missing = {});

// Fault-tolerance variant: recomputes over the surviving roster with the
// retry counter folded into the tag.
BlindingVector adjust_blinding(const DhGroup& group, const UserKeyPair& me,
                               const Roster& roster,
                               const std::set<std::uint32_t>& missing,
                               std::size_t cell_count, std::uint64_t round,
                               std::uint32_t retry);

// Computes every user's vector in one pass, evaluating each pair secret and
// keystream once and applying it with both signs. Bit-identical to calling
// blinding_vector per user; used by the harness where N is large.
std::vector<BlindingVector> all_blinding_vectors(
    const DhGroup& group, std::span<const UserKeyPair> users,
    const Roster& roster, std::size_t cell_count, RoundTag tag,
    const std::set<std::uint32_t>& missing = {});

// cells[k] + bv[k] mod 2^32, tagged with the round and user index.
BlindedReport blind_cells(const CountMinSketch& sketch,
                          const BlindingVector& bv, std::uint32_t user_index);

// Cell-wise sum of the reports; masks cancel exactly when the report set
// covers expected_indices. Throws IncompleteRosterError otherwise (the
// caller should run the fault-tolerance round), ShapeMismatchError if any
// report disagrees on tag or shape.
CountMinSketch unblind_aggregate(std::span<const BlindedReport> reports,
                                 const SketchParams& params,
                                 const std::set<std::uint32_t>& expected_indices);

}  // namespace adaudit

#endif  // ADAUDIT_BLINDING_HPP
