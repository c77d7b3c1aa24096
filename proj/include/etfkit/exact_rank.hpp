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

#include "etfkit/linalg.hpp"

namespace etfkit {

/// Rank over Q of an integer matrix. Fraction-free (Bareiss) elimination in
/// 64-bit arithmetic, redone in arbitrary precision if an intermediate
/// overflows.
Eigen::Index exact_rank(const IntMatrix& m);

/// Integer matrix whose rows form a basis of the rational null space
/// {x : m x = 0}; one row per free column of the reduced echelon form.
/// Throws Error(DomainError) if a basis entry does not fit in 64 bits.
IntMatrix integer_kernel_basis(const IntMatrix& m);

/// For a real matrix whose entries are all integer multiples of its smallest
/// nonzero modulus s (within 1e-9 relative), returns the matrix divided by s
/// and rounded. Real Steiner ETFs qualify with s = rho^{-1/2}.
std::optional<IntMatrix> integer_scaling(const CMatrix& v);

}  // namespace etfkit
