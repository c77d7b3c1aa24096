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

#include <optional>
#include <string>

#include "etfkit/linalg.hpp"

namespace etfkit {

/// Largest order the real constructions will build.
inline constexpr std::int64_t kMaxHadamardOrder = 1024;

/// Sylvester doubling in exact +-1 arithmetic: 2^m x 2^m.
/// Throws Error(TooLarge) if 2^m > 1024.
IntMatrix sylvester_signs(int m);

/// Paley I (Jacobsthal) construction over GF(q), q = 3 mod 4, order q+1.
/// Throws Error(BadResidueClass) or Error(NotPrimePower).
IntMatrix paley_i_signs(std::uint32_t q);

CMatrix sylvester(int m);
CMatrix paley_i(std::uint32_t q);

/// Fourier matrix H_jk = exp(2 pi i jk / n); complex Hadamard for every n.
CMatrix dft(int n);

/// A real Hadamard matrix of order n together with how it was obtained
/// (e.g. "sylvester(2)", "paley_i(11)", "kron(sylvester(1),paley_i(11))").
struct RealHadamard {
  IntMatrix signs;
  std::string recipe;

  CMatrix matrix() const { return signs.cast<double>().cast<Complex>(); }
};

/// Tries, in order: n in {1, 2}; Sylvester for powers of two; Paley I when
/// n-1 is a prime power = 3 mod 4; Kronecker products of those. Returns
/// nullopt when no recipe applies.
std::optional<RealHadamard> real_hadamard(std::int64_t n);

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

struct HadamardReport {
  bool passed = false;
  bool square = false;
  /// max_ij ||H_ij| - 1|
  double max_modulus_deviation = 0.0;
  /// max entry of |H H* - n I|
  double orthogonality_residual = 0.0;
};

/// Unimodular entries within the entrywise tolerance and
/// max |H H* - n I| < tolerance * n.
HadamardReport verify_hadamard(const CMatrix& h);

/// Exact integer check H H^T = n I.
bool is_hadamard_exact(const IntMatrix& h);

}  // namespace etfkit
