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

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace etfkit {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Entrywise tolerance shared by frame and Hadamard checks. Defaults to 1e-9;
// the ETFKIT_TOL environment variable overrides it at first use.
double entrywise_tolerance();
void set_entrywise_tolerance(double tol);

/// Dense Hermitian matrix. Construction symmetrizes its argument as
/// (A + A*) / 2, so serialized matrices with rounding noise are accepted.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const CMatrix& a);

  Eigen::Index dim() const { return data_.rows(); }
  const CMatrix& matrix() const { return data_; }

  /// Eigenvalues in ascending order.
  RVector eigenvalues() const;

 private:
  CMatrix data_;
};

/// <A, B>_F = Re tr(A* B); real for Hermitian arguments.
double frobenius_inner(const CMatrix& a, const CMatrix& b);

/// Entrywise squared modulus |a_ij|^2.
RMatrix abs_squared(const CMatrix& a);

/// Ascending eigenvalues of a real symmetric matrix (symmetrized first).
RVector symmetric_eigenvalues(const RMatrix& a);

/// Ascending eigenvalues of a Hermitian matrix (symmetrized first).
RVector hermitian_eigenvalues(const CMatrix& a);

/// True iff every imaginary part is exactly zero.
bool is_exactly_real(const CMatrix& a);

/// Numerical rank: singular values above rel_tol * sigma_max.
Eigen::Index numerical_rank(const CMatrix& a, double rel_tol);

/// Largest entrywise modulus.
double max_abs(const CMatrix& a);
double max_abs(const RMatrix& a);

}  // namespace etfkit
