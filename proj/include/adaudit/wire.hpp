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

#ifndef ADAUDIT_WIRE_HPP
#define ADAUDIT_WIRE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "adaudit/blinding.hpp"
#include "adaudit/bytes.hpp"

namespace adaudit {

// Protocol messages exchanged during a weekly round. These are the only
// payloads a client ever sends; none of them carries ad URLs or unmasked
// per-user counts.
enum class MsgType : std::uint8_t {
  Report = 1,
  MissingList = 2,
  AdjustedReport = 3,
  ThresholdBroadcast = 4,
  UsersCountRequest = 5,
  UsersCountResponse = 6,
  OprfRequest = 7,
  OprfResponse = 8,
};

std::string msg_type_name(MsgType t);

enum class ThresholdMode : std::uint8_t { Mean = 0, MeanPlusMedian = 1 };

struct MissingListMsg {
  RoundTag tag;  // tag.retry is the retry counter survivors must use
  std::vector<std::uint32_t> missing;  // sorted roster indices
};

struct ThresholdBroadcastMsg {
  RoundTag tag;
  ThresholdMode mode = ThresholdMode::Mean;
  double users_threshold = 0.0;
};

struct UsersCountRequestMsg {
  RoundTag tag;
  std::vector<std::uint64_t> ids;
};

struct UsersCountResponseMsg {
  RoundTag tag;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> counts;
};

struct OprfRequestMsg {
  Bytes value;  // big-endian, exactly modulus length
};

struct OprfResponseMsg {
  Bytes value;
};

// Length-prefixed binary encodings; every message starts with a schema
// version and its type byte. decode_* throws MalformedHeaderError /
// TruncatedPayloadError on bad input.
Bytes encode_report(const BlindedReport& report, MsgType type);
BlindedReport decode_report(std::span<const std::uint8_t> data, MsgType expected);

Bytes encode_missing_list(const MissingListMsg& msg);
MissingListMsg decode_missing_list(std::span<const std::uint8_t> data);

Bytes encode_threshold_broadcast(const ThresholdBroadcastMsg& msg);
ThresholdBroadcastMsg decode_threshold_broadcast(std::span<const std::uint8_t> data);

Bytes encode_users_count_request(const UsersCountRequestMsg& msg);
UsersCountRequestMsg decode_users_count_request(std::span<const std::uint8_t> data);

Bytes encode_users_count_response(const UsersCountResponseMsg& msg);
UsersCountResponseMsg decode_users_count_response(std::span<const std::uint8_t> data);

Bytes encode_oprf_message(const Bytes& residue, MsgType type);
Bytes decode_oprf_message(std::span<const std::uint8_t> data, MsgType expected);

// Peeks the type byte of an encoded message.
MsgType peek_type(std::span<const std::uint8_t> data);

// --- roster file -------------------------------------------------------
// Text format:
//   roster v1
//   group <name>
//   <index> <hex public key>        (one line per member, indices 1..N)
std::string save_roster(const Roster& roster, const std::string& group_name);
std::pair<Roster, std::string> load_roster(const std::string& text);

}  // namespace adaudit

#endif  // ADAUDIT_WIRE_HPP
