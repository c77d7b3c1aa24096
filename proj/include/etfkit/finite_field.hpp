// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The etfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

namespace etfkit {

/// GF(q) with q = p^m. Elements are the integers 0..q-1; element x encodes
/// the polynomial sum_i c_i t^i with c_i the base-p digits of x (low digit
/// first). 0 and 1 are the additive and multiplicative identities.
class FiniteField {
 public:
  using Element = std::uint32_t;

  /// Builds GF(q) for 2 <= q <= 2^16. For m > 1 the modulus is the
  /// lexicographically smallest monic irreducible polynomial of degree m,
  /// comparing coefficient lists ordered low-to-high degree.
  /// Throws Error(NotPrimePower) or Error(DomainError).
  explicit FiniteField(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }

  /// Monic modulus coefficients, low-to-high degree (size m+1); empty for
  /// prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const;
  /// Throws Error(DomainError) for a == 0.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;

  /// Quadratic character: 0 for zero, +1 for nonzero squares, -1 otherwise.
  /// Only meaningful for odd q.
  int quadratic_character(Element a) const;

 private:
  Element poly_mul(Element a, Element b) const;

  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::vector<std::uint32_t> modulus_;
  // Discrete log tables over a primitive element; exp_ has length q-1.
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
};

/// Returns (p, m) with q = p^m, or (0, 0) if q is not a prime power.
struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
};
PrimePower factor_prime_power(std::uint64_t q);

bool is_prime(std::uint64_t n);

/// Trial-division irreducibility test over Z/p for a monic polynomial given
/// low-to-high.
bool is_irreducible(const std::vector<std::uint32_t>& coeffs, std::uint32_t p);

}  // namespace etfkit
