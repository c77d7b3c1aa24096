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

#include "etfkit/finite_field.hpp"

#include <string>

#include "etfkit/errors.hpp"

namespace etfkit {

namespace {

using Poly = std::vector<std::uint32_t>;  // low-to-high, trailing zeros trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a divided by monic-or-not b over Z/p.
Poly poly_rem(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::uint32_t lead_inv = inverse_mod_prime(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = std::uint64_t(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly decode(std::uint32_t x, std::uint32_t p, std::uint32_t m) {
  Poly d(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

std::uint32_t encode(const Poly& d, std::uint32_t p) {
  std::uint32_t x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePower factor_prime_power(std::uint64_t q) {
  if (q < 2) return {};
  auto factors = prime_factors(q);
  if (factors.size() != 1) return {};
  PrimePower pp;
  pp.p = static_cast<std::uint32_t>(factors[0]);
  while (q > 1) {
    q /= pp.p;
    ++pp.m;
  }
  return pp;
}

bool is_irreducible(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
  Poly f = coeffs;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Every monic divisor candidate of degree d in [1, deg/2].
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      Poly g(d + 1, 0);
      std::uint64_t x = n;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  if (q < 2 || q > (1u << 16))
    throw Error(ErrorCode::DomainError,
                "field order " + std::to_string(q) + " outside [2, 65536]");
  const PrimePower pp = factor_prime_power(q);
  if (pp.p == 0)
    throw Error(ErrorCode::NotPrimePower,
                std::to_string(q) + " has two distinct prime factors");
  p_ = pp.p;
  m_ = pp.m;

  if (m_ > 1) {
    // Lexicographic order on (c0, c1, ..., c_{m-1}): c0 is the most
    // significant position, so enumerate n with c0 as its leading digit.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m_; ++i) count *= p_;
    for (std::uint64_t n = 0; n < count; ++n) {
      Poly cand(m_ + 1, 0);
      std::uint64_t x = n;
      for (std::uint32_t i = m_; i-- > 0;) {
        cand[i] = static_cast<std::uint32_t>(x % p_);
        x /= p_;
      }
      cand[m_] = 1;
      if (is_irreducible(cand, p_)) {
        modulus_ = cand;
        break;
      }
    }
  }

  // Primitive element g: g^((q-1)/l) != 1 for every prime l | q-1.
  const auto factors = prime_factors(q_ - 1);
  auto slow_pow = [&](Element a, std::uint64_t e) {
    Element r = 1;
    while (e) {
      if (e & 1) r = poly_mul(r, a);
      a = poly_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  Element gen = 1;
  for (Element g = 1; g < q_; ++g) {
    bool primitive = true;
    for (auto l : factors) {
      if (slow_pow(g, (q_ - 1) / l) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = g;
      break;
    }
  }
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Element cur = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = cur;
    log_[cur] = i;
    cur = poly_mul(cur, gen);
  }
}

FiniteField::Element FiniteField::poly_mul(Element a, Element b) const {
  if (m_ == 1)
    return static_cast<Element>(std::uint64_t(a) * b % p_);
  const Poly da = decode(a, p_, m_), db = decode(b, p_, m_);
  Poly prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i)
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
  Poly r = poly_rem(prod, modulus_, p_);
  r.resize(m_, 0);
  return encode(r, p_);
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  if (m_ == 1) return (a + b) % p_;
  if (p_ == 2) return a ^ b;
  Element out = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::neg(Element a) const {
  if (m_ == 1) return (p_ - a % p_) % p_;
  if (p_ == 2) return a;
  Element out = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(std::uint64_t(log_[a]) + log_[b]) % (q_ - 1)];
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::DomainError, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

int FiniteField::quadratic_character(Element a) const {
  if (a == 0) return 0;
  return log_[a] % 2 == 0 ? 1 : -1;
}

}  // namespace etfkit
