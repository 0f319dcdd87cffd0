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

#ifndef ADAUDIT_OPRF_HPP
#define ADAUDIT_OPRF_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "adaudit/bytes.hpp"
#include "adaudit/rng.hpp"
#include "adaudit/sketch.hpp"

namespace adaudit {

// Public half of the mapping server's RSA key. bits < 2048 marks the key
// as a test key.
struct OprfPublicKey {
  mpz_class n;
  mpz_class e;
  std::uint32_t bits = 0;
  bool insecure = true;

  std::size_t modulus_bytes() const { return (bits + 7) / 8; }
};

// Full RSA triple; d never leaves the mapping server.
struct OprfServerKey {
  OprfPublicKey pub;
  mpz_class d;
};

// Client-side residue of an in-flight request: the blinding unit r and the
// digest the final check must reproduce.
struct OprfPending {
  mpz_class blind;          // r, unit of Z_n
  mpz_class url_digest;     // H(url)
};

// Deterministic RSA keygen from a seed; verifies e*d == 1 mod phi(n) before
// returning. bits must be >= 256 (tests) — production deployments use
// >= 2048, anything smaller is flagged insecure.
OprfServerKey oprf_keygen(std::uint32_t bits, std::uint64_t seed);

// Full-domain hash into Z_n: counter-mode expansion of SHA-256 with
// rejection of candidates >= n (and of 0).
mpz_class fdh_hash(std::string_view url, const mpz_class& n);

// request = H(url) * r^e mod n with fresh uniform unit r.
struct BlindRequest {
  mpz_class request;
  OprfPending pending;
};
BlindRequest blind_request(std::string_view url, const OprfPublicKey& pub,
                           Rng& rng);

// request^d mod n. Throws OutOfRangeError unless 0 < request < n.
mpz_class evaluate(const mpz_class& request, const OprfServerKey& key);

// Unblinds, verifies y'^e == H(url) mod n, then maps through G (64-bit hash
// of the fixed-width encoding of y') into [1, a_size].
AdId finalize(const mpz_class& signed_value, const OprfPending& pending,
              const OprfPublicKey& pub, std::uint64_t a_size);

// G: 64-bit hash of a canonical (fixed-width big-endian) residue encoding.
std::uint64_t residue_hash64(const mpz_class& value, std::size_t width_bytes);

// One request/response exchange with the mapping server, however it is
// reached. Failures surface as TransportError (retryable).
class OprfTransport {
 public:
  virtual ~OprfTransport() = default;
  virtual mpz_class exchange(const mpz_class& request) = 0;
};

// In-process transport holding the server key directly; counts exchanges.
class LocalOprfTransport final : public OprfTransport {
 public:
  explicit LocalOprfTransport(const OprfServerKey& key) : key_(&key) {}
  mpz_class exchange(const mpz_class& request) override;
  std::uint64_t exchanges() const { return exchanges_; }

 private:
  const OprfServerKey* key_;
  std::uint64_t exchanges_ = 0;
};

// Cache-through mapping: a hit answers locally, a miss costs exactly one
// exchange. The mapping is deterministic per (key, url, a_size), so the
// cache can be shared or per-client without changing results.
using AdIdCache = std::map<std::string, AdId, std::less<>>;
AdId map_url(std::string_view url, AdIdCache& cache, OprfTransport& transport,
             const OprfPublicKey& pub, std::uint64_t a_size, Rng& rng);

// Fixed-width big-endian integer encodings used on the wire; both protocol
// messages are exactly modulus_bytes long.
Bytes encode_residue(const mpz_class& value, std::size_t width_bytes);
mpz_class decode_residue(std::span<const std::uint8_t> data);

// Public-key descriptor file (n, e, bits, insecure); d is never written.
std::string save_public_key(const OprfPublicKey& pub);
OprfPublicKey load_public_key(const std::string& text);

}  // namespace adaudit

#endif  // ADAUDIT_OPRF_HPP
