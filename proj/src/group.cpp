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

#include "adaudit/group.hpp"

#include <openssl/bn.h>
#include <openssl/ec.h>
#include <openssl/obj_mac.h>

#include <stdexcept>

#include "adaudit/hash.hpp"

namespace adaudit {

namespace {

// ---------------------------------------------------------------------------
// Test group: multiplicative subgroup of Z_p^* with p a 62-bit safe prime,
// q = (p-1)/2 prime, generator g = 4 (a quadratic residue, so of order q).

constexpr std::uint64_t kModpPrime = 0x40000000000019c3ULL;   // p, safe prime
constexpr std::uint64_t kModpOrder = 0x2000000000000ce1ULL;   // q = (p-1)/2
constexpr std::uint64_t kModpGenerator = 4;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

Bytes encode_u64be(std::uint64_t v) {
  Bytes out(8);
  for (int i = 7; i >= 0; --i) {
    out[i] = static_cast<std::uint8_t>(v);
    v >>= 8;
  }
  return out;
}

std::uint64_t decode_u64be(const Bytes& b) {
  if (b.size() != 8) {
    throw InvalidElementError("modp encoding must be 8 bytes");
  }
  std::uint64_t v = 0;
  for (std::uint8_t byte : b) v = (v << 8) | byte;
  return v;
}

class ModpGroup final : public DhGroup {
 public:
  std::string name() const override { return "modp62-insecure"; }
  bool insecure() const override { return true; }
  std::size_t element_size() const override { return 8; }

  Bytes scalar_from_seed(std::span<const std::uint8_t> seed) const override {
    HashStream stream(seed, "modp-scalar");
    for (;;) {
      Bytes raw = stream.next(8);
      std::uint64_t v = 0;
      for (std::uint8_t byte : raw) v = (v << 8) | byte;
      v %= kModpOrder;
      if (v != 0) return encode_u64be(v);
    }
  }

  Bytes base_exp(const Bytes& scalar) const override {
    return encode_u64be(
        powmod_u64(kModpGenerator, decode_scalar(scalar), kModpPrime));
  }

  Bytes exp(const Bytes& element, const Bytes& scalar) const override {
    std::uint64_t e = decode_u64be(element);
    if (e <= 1 || e >= kModpPrime) {
      throw InvalidElementError("modp element out of range or identity");
    }
    // Subgroup membership: e^q == 1.
    if (powmod_u64(e, kModpOrder, kModpPrime) != 1) {
      throw InvalidElementError("modp element outside prime-order subgroup");
    }
    return encode_u64be(powmod_u64(e, decode_scalar(scalar), kModpPrime));
  }

 private:
  static std::uint64_t decode_scalar(const Bytes& scalar) {
    std::uint64_t v = decode_u64be(scalar);
    if (v == 0 || v >= kModpOrder) {
      throw InvalidElementError("modp scalar out of range");
    }
    return v;
  }
};

// ---------------------------------------------------------------------------
// P-256. Elements are SEC1 compressed points (33 bytes).

struct BnDeleter {
  void operator()(BIGNUM* p) const { BN_free(p); }
};
struct BnCtxDeleter {
  void operator()(BN_CTX* p) const { BN_CTX_free(p); }
};
struct EcPointDeleter {
  void operator()(EC_POINT* p) const { EC_POINT_free(p); }
};
using BnPtr = std::unique_ptr<BIGNUM, BnDeleter>;
using BnCtxPtr = std::unique_ptr<BN_CTX, BnCtxDeleter>;
using EcPointPtr = std::unique_ptr<EC_POINT, EcPointDeleter>;

class P256Group final : public DhGroup {
 public:
  P256Group() {
    group_ = EC_GROUP_new_by_curve_name(NID_X9_62_prime256v1);
    if (group_ == nullptr) throw std::runtime_error("P-256 group unavailable");
    order_.reset(BN_new());
    BnCtxPtr ctx(BN_CTX_new());
    if (EC_GROUP_get_order(group_, order_.get(), ctx.get()) != 1) {
      throw std::runtime_error("P-256 order unavailable");
    }
  }

  ~P256Group() override { EC_GROUP_free(group_); }

  std::string name() const override { return "p256"; }
  bool insecure() const override { return false; }
  std::size_t element_size() const override { return 33; }

  Bytes scalar_from_seed(std::span<const std::uint8_t> seed) const override {
    HashStream stream(seed, "p256-scalar");
    BnCtxPtr ctx(BN_CTX_new());
    for (;;) {
      Bytes raw = stream.next(32);
      BnPtr v(BN_bin2bn(raw.data(), static_cast<int>(raw.size()), nullptr));
      if (v == nullptr) throw std::runtime_error("BN_bin2bn failed");
      if (BN_is_zero(v.get()) || BN_cmp(v.get(), order_.get()) >= 0) continue;
      Bytes out(32);
      if (BN_bn2binpad(v.get(), out.data(), 32) != 32) {
        throw std::runtime_error("scalar encoding failed");
      }
      return out;
    }
  }

  Bytes base_exp(const Bytes& scalar) const override {
    BnPtr k = decode_scalar(scalar);
    BnCtxPtr ctx(BN_CTX_new());
    EcPointPtr p(EC_POINT_new(group_));
    if (EC_POINT_mul(group_, p.get(), k.get(), nullptr, nullptr, ctx.get()) != 1) {
      throw std::runtime_error("P-256 base multiplication failed");
    }
    return encode_point(p.get(), ctx.get());
  }

  Bytes exp(const Bytes& element, const Bytes& scalar) const override {
    BnCtxPtr ctx(BN_CTX_new());
    EcPointPtr p = decode_point(element, ctx.get());
    BnPtr k = decode_scalar(scalar);
    EcPointPtr r(EC_POINT_new(group_));
    if (EC_POINT_mul(group_, r.get(), nullptr, p.get(), k.get(), ctx.get()) != 1) {
      throw std::runtime_error("P-256 point multiplication failed");
    }
    if (EC_POINT_is_at_infinity(group_, r.get())) {
      throw InvalidElementError("P-256 result is the identity");
    }
    return encode_point(r.get(), ctx.get());
  }

 private:
  BnPtr decode_scalar(const Bytes& scalar) const {
    BnPtr v(BN_bin2bn(scalar.data(), static_cast<int>(scalar.size()), nullptr));
    if (v == nullptr || BN_is_zero(v.get()) ||
        BN_cmp(v.get(), order_.get()) >= 0) {
      throw InvalidElementError("P-256 scalar out of range");
    }
    return v;
  }

  EcPointPtr decode_point(const Bytes& element, BN_CTX* ctx) const {
    EcPointPtr p(EC_POINT_new(group_));
    if (element.empty() ||
        EC_POINT_oct2point(group_, p.get(), element.data(), element.size(),
                           ctx) != 1) {
      throw InvalidElementError("byte string is not a P-256 point");
    }
    if (EC_POINT_is_at_infinity(group_, p.get())) {
      throw InvalidElementError("P-256 identity element rejected");
    }
    return p;
  }

  Bytes encode_point(const EC_POINT* p, BN_CTX* ctx) const {
    Bytes out(element_size());
    std::size_t n = EC_POINT_point2oct(group_, p, POINT_CONVERSION_COMPRESSED,
                                       out.data(), out.size(), ctx);
    if (n != out.size()) throw std::runtime_error("point encoding failed");
    return out;
  }

  EC_GROUP* group_ = nullptr;
  BnPtr order_;
};

}  // namespace

std::unique_ptr<DhGroup> make_p256_group() {
  return std::make_unique<P256Group>();
}

std::unique_ptr<DhGroup> make_insecure_modp_group() {
  return std::make_unique<ModpGroup>();
}

std::unique_ptr<DhGroup> make_group(const std::string& name) {
  if (name == "p256") return make_p256_group();
  if (name == "modp62-insecure") return make_insecure_modp_group();
  throw InvalidParameterError("unknown group \"" + name + "\"");
}

}  // namespace adaudit
