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

#include "adaudit/hash.hpp"

#include <openssl/evp.h>

#include <bit>
#include <cstring>
#include <stdexcept>

namespace adaudit {

Digest32 sha256(std::span<const std::uint8_t> data) {
  Digest32 out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(),
                 nullptr) != 1 ||
      len != out.size()) {
    throw std::runtime_error("sha256 failed");
  }
  return out;
}

Digest32 sha256(std::string_view data) {
  return sha256(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

HashStream::HashStream(std::span<const std::uint8_t> seed_material,
                       std::string_view label) {
  prefix_.assign(seed_material.begin(), seed_material.end());
  prefix_.insert(prefix_.end(), label.begin(), label.end());
}

HashStream::HashStream(std::uint64_t seed, std::string_view label) {
  append_u64le(prefix_, seed);
  prefix_.insert(prefix_.end(), label.begin(), label.end());
}

void HashStream::fill(std::span<std::uint8_t> out) {
  std::size_t pos = 0;
  while (pos < out.size()) {
    if (block_used_ == block_.size()) {
      Bytes msg = prefix_;
      append_u64le(msg, counter_++);
      block_ = sha256(msg);
      block_used_ = 0;
    }
    std::size_t n = std::min(out.size() - pos, block_.size() - block_used_);
    std::memcpy(out.data() + pos, block_.data() + block_used_, n);
    block_used_ += n;
    pos += n;
  }
}

Bytes HashStream::next(std::size_t n) {
  Bytes out(n);
  fill(out);
  return out;
}

void keystream_u32(const Digest32& key, std::span<std::uint32_t> out) {
  if (out.empty()) return;
  static const std::uint8_t iv[16] = {0};
  EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
  if (ctx == nullptr) throw std::runtime_error("cipher ctx alloc failed");
  if (EVP_EncryptInit_ex(ctx, EVP_chacha20(), nullptr, key.data(), iv) != 1) {
    EVP_CIPHER_CTX_free(ctx);
    throw std::runtime_error("chacha20 init failed");
  }
  // Encrypting zeros yields the raw keystream.
  static constexpr std::size_t kChunk = 1 << 14;
  static const std::uint8_t zeros[kChunk] = {0};
  auto* dst = reinterpret_cast<std::uint8_t*>(out.data());
  std::size_t total = out.size() * 4;
  std::size_t pos = 0;
  int produced = 0;
  while (pos < total) {
    int n = static_cast<int>(std::min(kChunk, total - pos));
    if (EVP_EncryptUpdate(ctx, dst + pos, &produced, zeros, n) != 1 ||
        produced != n) {
      EVP_CIPHER_CTX_free(ctx);
      throw std::runtime_error("chacha20 update failed");
    }
    pos += static_cast<std::size_t>(n);
  }
  EVP_CIPHER_CTX_free(ctx);
  if constexpr (std::endian::native == std::endian::big) {
    for (auto& w : out) w = __builtin_bswap32(w);
  }
}

}  // namespace adaudit
