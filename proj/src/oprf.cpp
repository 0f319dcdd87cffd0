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

#include "adaudit/oprf.hpp"

#include <sstream>

#include "adaudit/hash.hpp"

namespace adaudit {

namespace {

mpz_class mpz_from_bytes(std::span<const std::uint8_t> data) {
  mpz_class v;
  mpz_import(v.get_mpz_t(), data.size(), 1, 1, 1, 0, data.data());
  return v;
}

// Deterministic candidate stream for prime generation.
mpz_class random_bits(HashStream& stream, std::uint32_t bits) {
  std::size_t nbytes = (bits + 7) / 8;
  Bytes raw = stream.next(nbytes);
  // Clear excess high bits, then force the top bit so the product of two
  // half-size primes has exactly `bits` bits.
  unsigned excess = static_cast<unsigned>(nbytes * 8 - bits);
  raw[0] &= static_cast<std::uint8_t>(0xff >> excess);
  raw[0] |= static_cast<std::uint8_t>(0x80 >> excess);
  return mpz_from_bytes(raw);
}

mpz_class next_prime_candidate(HashStream& stream, std::uint32_t bits) {
  mpz_class p = random_bits(stream, bits);
  // Also force the second-highest bit: keeps p*q from losing a bit.
  mpz_setbit(p.get_mpz_t(), bits - 2);
  mpz_class prime;
  mpz_nextprime(prime.get_mpz_t(), p.get_mpz_t());
  return prime;
}

}  // namespace

OprfServerKey oprf_keygen(std::uint32_t bits, std::uint64_t seed) {
  if (bits < 256 || bits % 2 != 0) {
    throw InvalidParameterError("oprf key size must be an even bit count >= 256");
  }
  HashStream stream(seed, "rsa-keygen");
  OprfServerKey key;
  key.pub.e = 65537;
  key.pub.bits = bits;
  key.pub.insecure = bits < 2048;
  for (;;) {
    mpz_class p = next_prime_candidate(stream, bits / 2);
    mpz_class q = next_prime_candidate(stream, bits / 2);
    if (p == q) continue;
    mpz_class n = p * q;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) != bits) continue;
    mpz_class phi = (p - 1) * (q - 1);
    mpz_class d;
    if (mpz_invert(d.get_mpz_t(), key.pub.e.get_mpz_t(), phi.get_mpz_t()) == 0) {
      continue;  // gcd(e, phi) != 1; draw fresh primes
    }
    mpz_class check = (key.pub.e * d) % phi;
    if (check != 1) {
      throw Error("rsa keygen self-check failed");  // unreachable by construction
    }
    key.pub.n = n;
    key.d = d;
    return key;
  }
}

mpz_class fdh_hash(std::string_view url, const mpz_class& n) {
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  std::size_t nbytes = (bits + 7) / 8;
  unsigned excess = static_cast<unsigned>(nbytes * 8 - bits);
  HashStream stream(
      std::span<const std::uint8_t>(
          reinterpret_cast<const std::uint8_t*>(url.data()), url.size()),
      "fdh");
  for (;;) {
    Bytes raw = stream.next(nbytes);
    raw[0] &= static_cast<std::uint8_t>(0xff >> excess);
    mpz_class candidate = mpz_from_bytes(raw);
    if (candidate != 0 && candidate < n) return candidate;
  }
}

BlindRequest blind_request(std::string_view url, const OprfPublicKey& pub,
                           Rng& rng) {
  BlindRequest out;
  out.pending.url_digest = fdh_hash(url, pub.n);
  std::size_t nbytes = pub.modulus_bytes();
  for (;;) {
    Bytes raw(nbytes);
    for (auto& b : raw) b = static_cast<std::uint8_t>(rng.next_u64());
    mpz_class r = mpz_from_bytes(raw) % pub.n;
    if (r <= 1) continue;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), pub.n.get_mpz_t());
    if (g != 1) continue;
    out.pending.blind = r;
    break;
  }
  mpz_class r_e;
  mpz_powm(r_e.get_mpz_t(), out.pending.blind.get_mpz_t(),
           pub.e.get_mpz_t(), pub.n.get_mpz_t());
  out.request = (out.pending.url_digest * r_e) % pub.n;
  return out;
}

mpz_class evaluate(const mpz_class& request, const OprfServerKey& key) {
  if (request <= 0 || request >= key.pub.n) {
    throw OutOfRangeError("oprf request outside (0, n)");
  }
  mpz_class out;
  mpz_powm(out.get_mpz_t(), request.get_mpz_t(), key.d.get_mpz_t(),
           key.pub.n.get_mpz_t());
  return out;
}

std::uint64_t residue_hash64(const mpz_class& value, std::size_t width_bytes) {
  Bytes encoded = encode_residue(value, width_bytes);
  Digest32 d = sha256(encoded);
  std::uint64_t out = 0;
  for (int i = 0; i < 8; ++i) out = (out << 8) | d[i];
  return out;
}

AdId finalize(const mpz_class& signed_value, const OprfPending& pending,
              const OprfPublicKey& pub, std::uint64_t a_size) {
  if (a_size == 0) throw InvalidParameterError("a_size must be >= 1");
  mpz_class r_inv;
  if (mpz_invert(r_inv.get_mpz_t(), pending.blind.get_mpz_t(),
                 pub.n.get_mpz_t()) == 0) {
    throw InvalidParameterError("pending blind is not a unit");
  }
  mpz_class unblinded = (signed_value * r_inv) % pub.n;
  if (unblinded < 0) unblinded += pub.n;
  mpz_class check;
  mpz_powm(check.get_mpz_t(), unblinded.get_mpz_t(), pub.e.get_mpz_t(),
           pub.n.get_mpz_t());
  if (check != pending.url_digest) {
    throw InconsistentEvaluationError(
        "unblinded value fails y'^e == H(url); evaluation tampered or wrong key");
  }
  std::uint64_t g = residue_hash64(unblinded, pub.modulus_bytes());
  return AdId{(g % a_size) + 1};
}

mpz_class LocalOprfTransport::exchange(const mpz_class& request) {
  ++exchanges_;
  return evaluate(request, *key_);
}

AdId map_url(std::string_view url, AdIdCache& cache, OprfTransport& transport,
             const OprfPublicKey& pub, std::uint64_t a_size, Rng& rng) {
  if (auto it = cache.find(url); it != cache.end()) return it->second;
  BlindRequest req = blind_request(url, pub, rng);
  mpz_class signed_value = transport.exchange(req.request);
  AdId id = finalize(signed_value, req.pending, pub, a_size);
  cache.emplace(std::string(url), id);
  return id;
}

Bytes encode_residue(const mpz_class& value, std::size_t width_bytes) {
  if (value < 0) throw OutOfRangeError("cannot encode negative residue");
  Bytes out(width_bytes, 0);
  std::size_t written = 0;
  if (value != 0) {
    std::size_t need = (mpz_sizeinbase(value.get_mpz_t(), 2) + 7) / 8;
    if (need > width_bytes) {
      throw OutOfRangeError("residue wider than encoding width");
    }
    mpz_export(out.data() + (width_bytes - need), &written, 1, 1, 1, 0,
               value.get_mpz_t());
  }
  return out;
}

mpz_class decode_residue(std::span<const std::uint8_t> data) {
  return mpz_from_bytes(data);
}

std::string save_public_key(const OprfPublicKey& pub) {
  std::ostringstream out;
  out << "oprf-key v1\n";
  out << "bits " << pub.bits << "\n";
  out << "insecure " << (pub.insecure ? "true" : "false") << "\n";
  out << "n " << pub.n.get_str(16) << "\n";
  out << "e " << pub.e.get_str(16) << "\n";
  return out.str();
}

OprfPublicKey load_public_key(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "oprf-key v1") {
    throw ParseError("expected \"oprf-key v1\" header", 1, 1);
  }
  OprfPublicKey pub;
  bool have_bits = false, have_insecure = false, have_n = false, have_e = false;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string key, value;
    fields >> key >> value;
    if (key.empty() || value.empty()) {
      throw ParseError("expected \"<key> <value>\"", lineno, 1);
    }
    if (key == "bits") {
      pub.bits = static_cast<std::uint32_t>(std::stoul(value));
      have_bits = true;
    } else if (key == "insecure") {
      if (value != "true" && value != "false") {
        throw ParseError("insecure must be true or false", lineno, 10);
      }
      pub.insecure = value == "true";
      have_insecure = true;
    } else if (key == "n") {
      if (pub.n.set_str(value, 16) != 0) {
        throw ParseError("n is not valid hex", lineno, 3);
      }
      have_n = true;
    } else if (key == "e") {
      if (pub.e.set_str(value, 16) != 0) {
        throw ParseError("e is not valid hex", lineno, 3);
      }
      have_e = true;
    } else {
      throw ParseError("unknown key \"" + key + "\"", lineno, 1);
    }
  }
  if (!have_bits || !have_insecure || !have_n || !have_e) {
    throw ParseError("key descriptor missing required fields", lineno, 1);
  }
  return pub;
}

}  // namespace adaudit
