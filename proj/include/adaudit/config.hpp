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

#ifndef ADAUDIT_CONFIG_HPP
#define ADAUDIT_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace adaudit {

// "key = value" configuration text, one pair per line, '#' comments.
// Parse errors carry line/column; typed getters validate values and
// remember which keys were read so unknown keys can be rejected.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(const std::string& text);
  static KeyValueConfig parse_file(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::string get_string(const std::string& key, const std::string& fallback);
  double get_double(const std::string& key, double fallback);
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback);
  bool get_bool(const std::string& key, bool fallback);

  // Throws ParseError naming the first key that was never consumed.
  void reject_unknown_keys() const;

 private:
  struct Entry {
    std::string value;
    std::size_t line;
    std::size_t column;
  };
  std::map<std::string, Entry> values_;
  std::set<std::string> consumed_;
};

}  // namespace adaudit

#endif  // ADAUDIT_CONFIG_HPP
