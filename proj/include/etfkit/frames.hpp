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

#include <array>
#include <cstddef>
#include <vector>

#include "etfkit/designs.hpp"
#include "etfkit/linalg.hpp"

namespace etfkit {

/// N unit vectors in C^r, stored as the r x N synthesis matrix whose
/// columns are the frame vectors. Immutable once built.
class Frame {
 public:
  /// Validates unit-norm columns, r <= N and full row rank.
  /// Throws Error(NotAFrame) otherwise.
  static Frame from_synthesis(CMatrix v);

  const CMatrix& synthesis() const { return v_; }
  /// Ambient dimension r.
  Eigen::Index dim() const { return v_.rows(); }
  /// Number of vectors N.
  Eigen::Index size() const { return v_.cols(); }
  /// True iff every imaginary part is exactly zero.
  bool is_real() const { return real_; }

 private:
  Frame(CMatrix v, bool real) : v_(std::move(v)), real_(real) {}

  CMatrix v_;
  bool real_;
};

struct GramMatrix {
  CMatrix x;
  /// max_{i != j} |X_ij|; 0 for a single vector.
  double coherence = 0.0;
};

/// X = V* V, Hermitian-symmetrized.
GramMatrix gram(const Frame& f);

struct FrameReport {
  Eigen::Index n = 0;
  Eigen::Index r = 0;
  bool is_untf = false;
  bool is_etf = false;
  double coherence = 0.0;
  /// Spread max - min of the off-diagonal moduli.
  double coherence_spread = 0.0;
  double welch = 0.0;
  bool welch_equality = false;
  /// ||sum v_i v_i* - (N/r) I||_F, max |lambda - N/r| over the r largest
  /// Gram eigenvalues, | ||X||_F^2 - N^2/r |.
  std::array<double, 3> untf_residuals{};
  long long gerzon_limit_real = 0;
  long long gerzon_limit_complex = 0;
};

/// Runs all three UNTF tests, the equiangularity test and the Welch
/// comparison. Throws Error(GerzonViolation) if an ETF with coherence < 1
/// exceeds the Gerzon limit for its field.
FrameReport verify_frame(const Frame& f);

/// sqrt((N - r) / (r (N - 1))). Requires 1 <= r <= N, N >= 2.
double welch_bound(long long n, long long r);

/// r(r+1)/2 for real frames, r^2 for complex.
long long gerzon_limit(bool real, long long r);

/// r+1 vectors in R^r with pairwise inner products -1/r, built from the
/// Helmert basis of the hyperplane orthogonal to the all-ones vector.
Frame simplex_etf(int r);

/// Hadamard row used for each (point, incident block) slot: entry [j][s]
/// is the row placed at the s-th block (in block order) through point j.
using SteinerRowAssignment = std::vector<std::vector<std::size_t>>;

/// Steiner ETF with N = v(1+rho), r = b and coherence 1/rho. Point j's
/// s-th incident block receives Hadamard row s+1 (row 0 is never used).
/// Throws Error(SizeMismatch), Error(NotHadamard) or Error(InvalidDesign).
Frame steiner_etf(const SteinerSystem& sys, const CMatrix& h);

/// Same with an explicit row assignment; each point must use rho distinct
/// rows of H.
Frame steiner_etf(const SteinerSystem& sys, const CMatrix& h,
                  const SteinerRowAssignment& rows);

/// N vectors in C^{N-r} with Gram X' = (N I - r X) / (N - r), completing V
/// to a scaled unitary via a Householder basis of ker V.
/// Throws Error(FullRank) when r == N and Error(NotUntf) for non-tight input.
Frame naimark_complement(const Frame& f);

}  // namespace etfkit
