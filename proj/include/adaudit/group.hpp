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

#ifndef ADAUDIT_GROUP_HPP
#define ADAUDIT_GROUP_HPP

#include <cstdint>
#include <memory>
#include <string>

#include "adaudit/bytes.hpp"

namespace adaudit {

// Cyclic group of prime order q with generator g, abstracted over its
// instantiation. Scalars and elements travel as opaque byte encodings.
// The production instantiation must be CDH-hard; the modp instantiation
// exists for fast unit tests only and says so via insecure().
class DhGroup {
 public:
  virtual ~DhGroup() = default;

  virtual std::string name() const = 0;
  virtual bool insecure() const = 0;
  virtual std::size_t element_size() const = 0;

  // Uniform scalar in [1, q-1], derived deterministically from seed_material.
  virtual Bytes scalar_from_seed(std::span<const std::uint8_t> seed_material) const = 0;

  // g^scalar.
  virtual Bytes base_exp(const Bytes& scalar) const = 0;

  // element^scalar. Throws InvalidElementError if element is not a valid
  // non-identity member of the group.
  virtual Bytes exp(const Bytes& element, const Bytes& scalar) const = 0;
};

// NIST P-256 (prime-order elliptic curve); elements are compressed points.
std::unique_ptr<DhGroup> make_p256_group();

// Multiplicative subgroup of order q mod a 62-bit safe prime. Fast and
// deterministic, but offers no real security; unit tests only.
std::unique_ptr<DhGroup> make_insecure_modp_group();

std::unique_ptr<DhGroup> make_group(const std::string& name);

}  // namespace adaudit

#endif  // ADAUDIT_GROUP_HPP
