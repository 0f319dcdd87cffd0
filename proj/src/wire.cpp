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

#include "adaudit/wire.hpp"

#include <algorithm>
#include <sstream>

namespace adaudit {

namespace {

constexpr std::uint16_t kSchemaVersion = 1;

void put_envelope(Bytes& out, MsgType type) {
  append_u16le(out, kSchemaVersion);
  append_u8(out, static_cast<std::uint8_t>(type));
}

ByteReader open_envelope(std::span<const std::uint8_t> data, MsgType expected) {
  ByteReader in(data);
  std::uint16_t version;
  std::uint8_t type;
  try {
    version = in.u16le();
    type = in.u8();
  } catch (const TruncatedPayloadError&) {
    throw MalformedHeaderError("message shorter than its envelope");
  }
  if (version != kSchemaVersion) {
    throw MalformedHeaderError("unsupported schema version " +
                               std::to_string(version));
  }
  if (type != static_cast<std::uint8_t>(expected)) {
    throw MalformedHeaderError("expected message type " +
                               msg_type_name(expected) + ", got " +
                               std::to_string(type));
  }
  return in;
}

void put_tag(Bytes& out, RoundTag tag) {
  append_u64le(out, tag.round);
  append_u32le(out, tag.retry);
}

RoundTag get_tag(ByteReader& in) {
  RoundTag tag;
  tag.round = in.u64le();
  tag.retry = in.u32le();
  return tag;
}

}  // namespace

std::string msg_type_name(MsgType t) {
  switch (t) {
    case MsgType::Report: return "Report";
    case MsgType::MissingList: return "MissingList";
    case MsgType::AdjustedReport: return "AdjustedReport";
    case MsgType::ThresholdBroadcast: return "ThresholdBroadcast";
    case MsgType::UsersCountRequest: return "UsersCountRequest";
    case MsgType::UsersCountResponse: return "UsersCountResponse";
    case MsgType::OprfRequest: return "OprfRequest";
    case MsgType::OprfResponse: return "OprfResponse";
  }
  return "Unknown(" + std::to_string(static_cast<int>(t)) + ")";
}

MsgType peek_type(std::span<const std::uint8_t> data) {
  if (data.size() < 3) throw MalformedHeaderError("message too short");
  return static_cast<MsgType>(data[2]);
}

Bytes encode_report(const BlindedReport& report, MsgType type) {
  if (type != MsgType::Report && type != MsgType::AdjustedReport) {
    throw InvalidParameterError("report messages are Report or AdjustedReport");
  }
  Bytes out;
  out.reserve(3 + 12 + 4 + 8 + 8 + report.cells.size() * 4);
  put_envelope(out, type);
  put_tag(out, report.tag);
  append_u32le(out, report.user_index);
  append_bytes(out, report.params_digest);
  append_u32le(out, report.depth);
  append_u32le(out, report.width);
  for (std::uint32_t c : report.cells) append_u32le(out, c);
  return out;
}

BlindedReport decode_report(std::span<const std::uint8_t> data, MsgType expected) {
  ByteReader in = open_envelope(data, expected);
  BlindedReport r;
  r.tag = get_tag(in);
  r.user_index = in.u32le();
  auto digest = in.take(8);
  std::copy(digest.begin(), digest.end(), r.params_digest.begin());
  r.depth = in.u32le();
  r.width = in.u32le();
  std::size_t cells = static_cast<std::size_t>(r.depth) * r.width;
  if (in.remaining() != cells * 4) {
    throw TruncatedPayloadError("report cell payload has wrong length");
  }
  r.cells.resize(cells);
  for (auto& c : r.cells) c = in.u32le();
  return r;
}

Bytes encode_missing_list(const MissingListMsg& msg) {
  Bytes out;
  put_envelope(out, MsgType::MissingList);
  put_tag(out, msg.tag);
  append_u32le(out, static_cast<std::uint32_t>(msg.missing.size()));
  for (std::uint32_t m : msg.missing) append_u32le(out, m);
  return out;
}

MissingListMsg decode_missing_list(std::span<const std::uint8_t> data) {
  ByteReader in = open_envelope(data, MsgType::MissingList);
  MissingListMsg msg;
  msg.tag = get_tag(in);
  std::uint32_t count = in.u32le();
  msg.missing.resize(count);
  for (auto& m : msg.missing) m = in.u32le();
  if (!in.done()) throw MalformedHeaderError("trailing bytes in MissingList");
  return msg;
}

Bytes encode_threshold_broadcast(const ThresholdBroadcastMsg& msg) {
  Bytes out;
  put_envelope(out, MsgType::ThresholdBroadcast);
  put_tag(out, msg.tag);
  append_u8(out, static_cast<std::uint8_t>(msg.mode));
  append_f64le(out, msg.users_threshold);
  return out;
}

ThresholdBroadcastMsg decode_threshold_broadcast(
    std::span<const std::uint8_t> data) {
  ByteReader in = open_envelope(data, MsgType::ThresholdBroadcast);
  ThresholdBroadcastMsg msg;
  msg.tag = get_tag(in);
  std::uint8_t mode = in.u8();
  if (mode > 1) throw MalformedHeaderError("unknown threshold mode");
  msg.mode = static_cast<ThresholdMode>(mode);
  msg.users_threshold = in.f64le();
  if (!in.done()) throw MalformedHeaderError("trailing bytes in broadcast");
  return msg;
}

Bytes encode_users_count_request(const UsersCountRequestMsg& msg) {
  Bytes out;
  put_envelope(out, MsgType::UsersCountRequest);
  put_tag(out, msg.tag);
  append_u32le(out, static_cast<std::uint32_t>(msg.ids.size()));
  for (std::uint64_t id : msg.ids) append_u64le(out, id);
  return out;
}

UsersCountRequestMsg decode_users_count_request(
    std::span<const std::uint8_t> data) {
  ByteReader in = open_envelope(data, MsgType::UsersCountRequest);
  UsersCountRequestMsg msg;
  msg.tag = get_tag(in);
  std::uint32_t count = in.u32le();
  msg.ids.resize(count);
  for (auto& id : msg.ids) id = in.u64le();
  if (!in.done()) throw MalformedHeaderError("trailing bytes in request");
  return msg;
}

Bytes encode_users_count_response(const UsersCountResponseMsg& msg) {
  Bytes out;
  put_envelope(out, MsgType::UsersCountResponse);
  put_tag(out, msg.tag);
  append_u32le(out, static_cast<std::uint32_t>(msg.counts.size()));
  for (auto [id, count] : msg.counts) {
    append_u64le(out, id);
    append_u32le(out, count);
  }
  return out;
}

UsersCountResponseMsg decode_users_count_response(
    std::span<const std::uint8_t> data) {
  ByteReader in = open_envelope(data, MsgType::UsersCountResponse);
  UsersCountResponseMsg msg;
  msg.tag = get_tag(in);
  std::uint32_t count = in.u32le();
  msg.counts.resize(count);
  for (auto& [id, c] : msg.counts) {
    id = in.u64le();
    c = in.u32le();
  }
  if (!in.done()) throw MalformedHeaderError("trailing bytes in response");
  return msg;
}

Bytes encode_oprf_message(const Bytes& residue, MsgType type) {
  if (type != MsgType::OprfRequest && type != MsgType::OprfResponse) {
    throw InvalidParameterError("oprf messages are OprfRequest or OprfResponse");
  }
  Bytes out;
  put_envelope(out, type);
  append_u32le(out, static_cast<std::uint32_t>(residue.size()));
  append_bytes(out, residue);
  return out;
}

Bytes decode_oprf_message(std::span<const std::uint8_t> data, MsgType expected) {
  ByteReader in = open_envelope(data, expected);
  std::uint32_t len = in.u32le();
  auto value = in.take(len);
  if (!in.done()) throw MalformedHeaderError("trailing bytes in oprf message");
  return Bytes(value.begin(), value.end());
}

std::string save_roster(const Roster& roster, const std::string& group_name) {
  roster.validate();
  std::ostringstream out;
  out << "roster v1\n";
  out << "group " << group_name << "\n";
  for (const auto& e : roster.entries) {
    out << e.index << " " << to_hex(e.public_element) << "\n";
  }
  return out.str();
}

std::pair<Roster, std::string> load_roster(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "roster v1") {
    throw ParseError("expected \"roster v1\" header", 1, 1);
  }
  if (!std::getline(in, line) || line.rfind("group ", 0) != 0 ||
      line.size() <= 6) {
    throw ParseError("expected \"group <name>\"", 2, 1);
  }
  std::string group_name = line.substr(6);
  Roster roster;
  std::size_t lineno = 2;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::uint32_t index;
    std::string hex;
    if (!(fields >> index >> hex)) {
      throw ParseError("expected \"<index> <hex key>\"", lineno, 1);
    }
    Roster::Entry entry;
    entry.index = index;
    try {
      entry.public_element = from_hex(hex);
    } catch (const MalformedHeaderError& e) {
      throw ParseError(e.what(), lineno, 1);
    }
    roster.entries.push_back(std::move(entry));
  }
  try {
    roster.validate();
  } catch (const IndexNotInRosterError& e) {
    throw ParseError(e.what(), lineno, 1);
  }
  return {std::move(roster), std::move(group_name)};
}

}  // namespace adaudit
