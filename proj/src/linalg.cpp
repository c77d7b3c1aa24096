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

#include "etfkit/linalg.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace etfkit {

namespace {

double initial_tolerance() {
  if (const char* env = std::getenv("ETFKIT_TOL")) {
    try {
      double v = std::stod(env);
      if (v > 0.0) return v;
    } catch (...) {
      // unparsable override: keep the default
    }
  }
  return 1e-9;
}

std::atomic<double>& tolerance_slot() {
  static std::atomic<double> slot{initial_tolerance()};
  return slot;
}

}  // namespace

double entrywise_tolerance() { return tolerance_slot().load(); }

void set_entrywise_tolerance(double tol) { tolerance_slot().store(tol); }

HermitianMatrix::HermitianMatrix(const CMatrix& a)
    : data_((a + a.adjoint()) * 0.5) {}

RVector HermitianMatrix::eigenvalues() const {
  return hermitian_eigenvalues(data_);
}

double frobenius_inner(const CMatrix& a, const CMatrix& b) {
  return (a.conjugate().cwiseProduct(b)).sum().real();
}

RMatrix abs_squared(const CMatrix& a) { return a.cwiseAbs2(); }

RVector symmetric_eigenvalues(const RMatrix& a) {
  RMatrix sym = (a + a.transpose()) * 0.5;
  Eigen::SelfAdjointEigenSolver<RMatrix> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

RVector hermitian_eigenvalues(const CMatrix& a) {
  CMatrix herm = (a + a.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

bool is_exactly_real(const CMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j).imag() != 0.0) return false;
  return true;
}

Eigen::Index numerical_rank(const CMatrix& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  const RVector& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cut = rel_tol * s(0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++rank;
  return rank;
}

double max_abs(const CMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double max_abs(const RMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

}  // namespace etfkit
