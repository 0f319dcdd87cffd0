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

#include "adaudit/blinding.hpp"

#include <algorithm>

#include "adaudit/hash.hpp"

namespace adaudit {

const Bytes& Roster::public_of(std::uint32_t index) const {
  if (!contains(index)) {
    throw IndexNotInRosterError("index " + std::to_string(index) +
                                " not in roster of size " +
                                std::to_string(entries.size()));
  }
  return entries[index - 1].public_element;
}

void Roster::validate() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].index != i + 1) {
      throw IndexNotInRosterError("roster indices must be 1..N contiguous");
    }
  }
}

UserKeyPair keygen(const DhGroup& group, std::uint64_t seed,
                   std::uint32_t index) {
  Bytes material;
  append_u64le(material, seed);
  UserKeyPair kp;
  kp.index = index;
  kp.private_scalar = group.scalar_from_seed(material);
  kp.public_element = group.base_exp(kp.private_scalar);
  return kp;
}

Bytes pair_secret(const DhGroup& group, const UserKeyPair& me,
                  const Bytes& other_public) {
  return group.exp(other_public, me.private_scalar);
}

namespace {

Digest32 mask_key(const Bytes& secret, RoundTag tag) {
  Bytes material = secret;
  const char label[] = "cell-mask";
  material.insert(material.end(), label, label + sizeof(label) - 1);
  append_u64le(material, tag.round);
  append_u32le(material, tag.retry);
  return sha256(material);
}

void check_parties(const Roster& roster, std::uint32_t my_index,
                   const std::set<std::uint32_t>& missing) {
  roster.validate();
  if (!roster.contains(my_index)) {
    throw IndexNotInRosterError("own index " + std::to_string(my_index) +
                                " not in roster");
  }
  if (missing.count(my_index) != 0) {
    throw IndexNotInRosterError("own index listed as missing");
  }
  for (std::uint32_t m : missing) {
    if (!roster.contains(m)) {
      throw IndexNotInRosterError("missing index " + std::to_string(m) +
                                  " not in roster");
    }
  }
}

}  // namespace

void pairwise_mask(const Bytes& secret, RoundTag tag,
                   std::span<std::uint32_t> out) {
  keystream_u32(mask_key(secret, tag), out);
}

BlindingVector blinding_vector(const DhGroup& group, const UserKeyPair& me,
                               const Roster& roster, std::size_t cell_count,
                               RoundTag tag,
                               const std::set<std::uint32_t>& missing) {
  check_parties(roster, me.index, missing);
  if (cell_count == 0) {
    throw InvalidParameterError("cell_count must be >= 1");
  }
  BlindingVector bv;
  bv.tag = tag;
  bv.values.assign(cell_count, 0);
  std::vector<std::uint32_t> mask(cell_count);
  for (const auto& entry : roster.entries) {
    std::uint32_t j = entry.index;
    if (j == me.index || missing.count(j) != 0) continue;
    Bytes secret = pair_secret(group, me, entry.public_element);
    pairwise_mask(secret, tag, mask);
    if (me.index > j) {
      for (std::size_t m = 0; m < cell_count; ++m) bv.values[m] += mask[m];
    } else {
      for (std::size_t m = 0; m < cell_count; ++m) bv.values[m] -= mask[m];
    }
  }
  return bv;
}

BlindingVector adjust_blinding(const DhGroup& group, const UserKeyPair& me,
                               const Roster& roster,
                               const std::set<std::uint32_t>& missing,
                               std::size_t cell_count, std::uint64_t round,
                               std::uint32_t retry) {
  return blinding_vector(group, me, roster, cell_count,
                         RoundTag{round, retry}, missing);
}

std::vector<BlindingVector> all_blinding_vectors(
    const DhGroup& group, std::span<const UserKeyPair> users,
    const Roster& roster, std::size_t cell_count, RoundTag tag,
    const std::set<std::uint32_t>& missing) {
  roster.validate();
  if (users.size() != roster.size()) {
    throw IndexNotInRosterError("need one keypair per roster entry");
  }
  std::vector<BlindingVector> out(users.size());
  for (std::size_t i = 0; i < users.size(); ++i) {
    out[i].tag = tag;
    out[i].values.assign(cell_count, 0);
  }
  std::vector<std::uint32_t> mask(cell_count);
  for (std::size_t a = 0; a < users.size(); ++a) {
    std::uint32_t i = users[a].index;
    if (missing.count(i) != 0) continue;
    for (std::size_t b = a + 1; b < users.size(); ++b) {
      std::uint32_t j = users[b].index;
      if (missing.count(j) != 0) continue;
      Bytes secret = pair_secret(group, users[a], roster.public_of(j));
      pairwise_mask(secret, tag, mask);
      // j > i: user j adds the mask, user i subtracts it.
      auto& vi = out[a].values;
      auto& vj = out[b].values;
      for (std::size_t m = 0; m < cell_count; ++m) {
        std::uint32_t w = mask[m];
        vi[m] -= w;
        vj[m] += w;
      }
    }
  }
  return out;
}

BlindedReport blind_cells(const CountMinSketch& sketch,
                          const BlindingVector& bv, std::uint32_t user_index) {
  auto cells = sketch.cells();
  if (bv.values.size() != cells.size()) {
    throw LengthMismatchError(
        "blinding vector length " + std::to_string(bv.values.size()) +
        " != cell count " + std::to_string(cells.size()));
  }
  BlindedReport report;
  report.tag = bv.tag;
  report.user_index = user_index;
  report.params_digest = sketch.params().digest();
  report.depth = sketch.params().depth;
  report.width = sketch.params().width;
  report.cells.resize(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    report.cells[k] = cells[k] + bv.values[k];
  }
  return report;
}

CountMinSketch unblind_aggregate(std::span<const BlindedReport> reports,
                                 const SketchParams& params,
                                 const std::set<std::uint32_t>& expected_indices) {
  std::set<std::uint32_t> present;
  for (const auto& r : reports) {
    if (!present.insert(r.user_index).second) {
      throw DuplicateReportError("two reports from user " +
                                 std::to_string(r.user_index));
    }
  }
  if (present != expected_indices) {
    throw IncompleteRosterError(
        "report set does not match the expected roster (" +
        std::to_string(present.size()) + " of " +
        std::to_string(expected_indices.size()) +
        " expected present); fault-tolerance round required");
  }
  if (reports.empty()) {
    throw IncompleteRosterError("cannot aggregate zero reports");
  }
  const auto digest = params.digest();
  CountMinSketch agg(params);
  auto cells = agg.cells_mut();
  for (const auto& r : reports) {
    if (r.tag != reports.front().tag) {
      throw ShapeMismatchError("reports span different round tags");
    }
    if (r.params_digest != digest || r.depth != params.depth ||
        r.width != params.width || r.cells.size() != cells.size()) {
      throw ShapeMismatchError("report shape or params digest mismatch");
    }
    for (std::size_t k = 0; k < cells.size(); ++k) cells[k] += r.cells[k];
  }
  return agg;
}

}  // namespace adaudit
