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
#include <utility>
#include <vector>

#include "etfkit/designs.hpp"
#include "etfkit/frames.hpp"
#include "etfkit/linalg.hpp"

namespace etfkit {

// ---------------------------------------------------------------------------
// Hermitian coordinates
//
// N x N Hermitian matrices form a real inner-product space of dimension N^2
// under <A, B> = Re tr(A* B). We use the orthonormal basis
//
//   E_ii,   (E_ij + E_ji)/sqrt(2),   i (E_ij - E_ji)/sqrt(2)     (i < j)
//
// laid out on the N^2 positions of a row-major N x N grid: position (i, i)
// holds E_ii, (i, j) with i < j the symmetric element of the pair and (j, i)
// the antisymmetric one. The coordinates of A at (i, j), i < j, are therefore
// sqrt(2) Re A_ij and sqrt(2) Im A_ij.
// ---------------------------------------------------------------------------

RVector hermitian_coordinates(const CMatrix& a);
CMatrix from_hermitian_coordinates(const RVector& coords, Eigen::Index n);
/// The basis element sitting at grid position `index` (= i*n + j).
CMatrix hermitian_basis_element(Eigen::Index n, Eigen::Index index);

/// Dense projectors are N^2 x N^2; refuse anything past this N.
inline constexpr Eigen::Index kMaxDenseFrameSize = 64;
/// Gate on cond(|X|^2) before inverting it.
inline constexpr double kMaxOverlapCondition = 1e12;

/// Orthogonal projector onto the perturbation subspace of the (complex)
/// elliptope at the Gram matrix X of a UNTF:
///
///   P A = (r^2/N^2) (X A X - sum_ij M_ij (x_i* A x_i) x_j x_j*),
///   M = (|X|^2)^{-1}.
///
/// Because M is symmetric the double sum collapses to X diag(M c) X with
/// c_i = x_i* A x_i, so P A = (r^2/N^2) X (A - diag(M c)) X.
class PertProjector {
 public:
  /// Throws Error(NotUntf) or Error(SingularX2).
  explicit PertProjector(const Frame& f);

  const Frame& frame() const { return frame_; }
  const CMatrix& gram() const { return x_; }
  /// (|X|^2)^{-1}
  const RMatrix& inverse_overlap() const { return inv_x2_; }
  /// 2-norm condition number of |X|^2.
  double overlap_condition() const { return condition_; }

  /// P A for an N x N matrix; A is Hermitian-symmetrized first.
  /// Throws Error(DimensionMismatch).
  CMatrix apply(const CMatrix& a) const;

  bool has_dense() const { return dense_.has_value(); }
  /// N^2 x N^2 real symmetric matrix of P in Hermitian coordinates.
  const RMatrix& dense() const;

  /// Projector with its dense form assembled. Throws Error(TooLargeForDense).
  static PertProjector with_dense(const Frame& f);

 private:
  Frame frame_;
  CMatrix x_;
  RMatrix x2_;
  RMatrix inv_x2_;
  double condition_ = 0.0;
  std::optional<RMatrix> dense_;
};

CMatrix project_pert(const Frame& f, const CMatrix& a);
PertProjector pert_projector_dense(const Frame& f);

/// Projector onto {V* H V : H Hermitian r x r, v_i* H v_i = 0} assembled
/// directly from that description (constraint null space, image,
/// orthonormalization). Shares no code path with PertProjector; used to
/// check it.
RMatrix pert_oracle(const Frame& f);

struct OverlapReport {
  /// min eig of I_r - W M W^T with W = |V|^2, M = (|X|^2)^{-1}
  double min_eig_identity_form = 0.0;
  /// min eig of |X|^2 - W^T W
  double min_eig_gram_form = 0.0;
  bool identity_form_holds = false;
  bool gram_form_holds = false;
  bool forms_agree = false;
  bool passed = false;
  double overlap_condition = 0.0;
};

/// Both forms of the overlap inequality W M W^T <= I_r, W^T W <= |X|^2.
/// Throws Error(SingularX2) or Error(NotUntf).
OverlapReport overlap_inequality_check(const Frame& f);

/// R = |V|^2 (|V|^2)^T, R_kl = sum_i |(v_i)_k|^2 |(v_i)_l|^2.
RMatrix r_matrix(const Frame& f);

struct SpectrumCluster {
  double value = 0.0;
  Eigen::Index multiplicity = 0;
};

/// RHS - R for the ETF bound R <= a I + e 11^T with
/// a = (1 - 1/r)/(1 - 1/N) and e = (N/r - 1)/(r (1 - 1/N)).
struct GapMatrix {
  RMatrix gap;
  RVector eigenvalues;
  double identity_coeff = 0.0;
  double ones_coeff = 0.0;
  double min_eig = 0.0;
  Eigen::Index kernel_dim = 0;
  Eigen::Index positive_count = 0;
  Eigen::Index negative_count = 0;
  bool passed = false;
  /// Eigenvalues grouped within 1e-7.
  std::vector<SpectrumCluster> spectrum;
};

inline constexpr double kGapNegativeTolerance = 1e-8;
/// Eigenvalues below this multiple of r count as kernel.
inline constexpr double kGapKernelScale = 1e-6;

/// Throws Error(NotEtf).
GapMatrix etf_gap(const Frame& f);

/// Predicted gap spectrum of a Steiner ETF built from `sys`:
/// 0 with multiplicity v, (1 - 1/r)/(1 - 1/N) with multiplicity b - v.
std::vector<SpectrumCluster> steiner_gap_prediction(const SteinerSystem& sys);

std::vector<SpectrumCluster> cluster_spectrum(const RVector& ascending, double tol);

/// c = N^2 (1 - 1/r) / (r(r+1)/2 - N).
double sos_witness_scale(long long n, long long r);

/// The projector onto vec(pert) of the real elliptope in plain row-major
/// vec coordinates (entry (i,j) of an N x N matrix at i*N + j). Only the
/// real symmetric sector of the dense Hermitian projector enters.
/// Throws Error(ComplexFrame).
RMatrix plain_vec_projector(const PertProjector& p);

/// Y = vec(X) vec(X)^T + c P for a real ETF with N < r(r+1)/2.
/// Throws Error(ComplexFrame), Error(NotEtf), Error(GerzonSaturated),
/// Error(TooLargeForDense).
RMatrix sos_witness(const Frame& f);

struct E4Report {
  /// max |Y - 1| over entries whose indices all have even multiplicity
  double even_entries_deviation = 0.0;
  /// max deviation of an entry from the mean of its odd-index-set group
  double odd_group_deviation = 0.0;
  /// max |Y_(0,i)(0,j) - X_ij|
  double gram_corner_deviation = 0.0;
  double min_eig = 0.0;
  double spectral_norm = 0.0;
  double asymmetry = 0.0;
  bool even_entries_ok = false;
  bool odd_groups_ok = false;
  bool gram_corner_ok = false;
  bool psd_ok = false;
  bool passed = false;
};

inline constexpr double kE4Tolerance = 1e-7;

/// Degree-4 moment-matrix conditions for Y (N^2 x N^2, tuple (a, b) at
/// index a*N + b) certifying X (N x N). Throws Error(DimensionMismatch).
E4Report verify_e4_membership(const RMatrix& y, const RMatrix& x);

}  // namespace etfkit
