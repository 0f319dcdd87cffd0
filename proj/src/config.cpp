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

#include "adaudit/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "adaudit/errors.hpp"

namespace adaudit {

namespace {

std::string trim(const std::string& s, std::size_t* lead = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (lead != nullptr) *lead = b;
  return s.substr(b, e - b);
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(const std::string& text) {
  KeyValueConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::size_t lead = 0;
    std::string stripped = trim(line, &lead);
    if (stripped.empty()) continue;
    std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected \"key = value\"", lineno, lead + 1);
    }
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ParseError("empty key before '='", lineno, lead + 1);
    }
    if (value.empty()) {
      throw ParseError("empty value for key \"" + key + "\"", lineno,
                       lead + eq + 2);
    }
    if (cfg.values_.count(key) != 0) {
      throw ParseError("duplicate key \"" + key + "\"", lineno, lead + 1);
    }
    cfg.values_[key] = Entry{value, lineno, lead + eq + 2};
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open config file \"" + path + "\"", 0, 0);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string KeyValueConfig::get_string(const std::string& key,
                                       const std::string& fallback) {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  consumed_.insert(key);
  return it->second.value;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  consumed_.insert(key);
  const Entry& e = it->second;
  try {
    std::size_t used = 0;
    double v = std::stod(e.value, &used);
    if (used != e.value.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw ParseError("value for \"" + key + "\" is not a number", e.line,
                     e.column);
  }
}

std::uint64_t KeyValueConfig::get_u64(const std::string& key,
                                      std::uint64_t fallback) {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  consumed_.insert(key);
  const Entry& e = it->second;
  try {
    std::size_t used = 0;
    if (!e.value.empty() && e.value[0] == '-') throw std::invalid_argument("neg");
    std::uint64_t v = std::stoull(e.value, &used);
    if (used != e.value.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw ParseError("value for \"" + key + "\" is not a non-negative integer",
                     e.line, e.column);
  }
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  consumed_.insert(key);
  const Entry& e = it->second;
  if (e.value == "true" || e.value == "on" || e.value == "1") return true;
  if (e.value == "false" || e.value == "off" || e.value == "0") return false;
  throw ParseError("value for \"" + key + "\" must be true/false/on/off",
                   e.line, e.column);
}

void KeyValueConfig::reject_unknown_keys() const {
  for (const auto& [key, entry] : values_) {
    if (consumed_.count(key) == 0) {
      throw ParseError("unknown key \"" + key + "\"", entry.line, entry.column);
    }
  }
}

}  // namespace adaudit
