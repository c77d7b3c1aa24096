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

#include "etfkit/hadamard.hpp"

#include <cmath>
#include <numbers>

#include "etfkit/errors.hpp"
#include "etfkit/finite_field.hpp"

namespace etfkit {

IntMatrix sylvester_signs(int m) {
  if (m < 0) throw Error(ErrorCode::DomainError, "negative Sylvester exponent");
  if (m > 10 || (std::int64_t(1) << m) > kMaxHadamardOrder)
    throw Error(ErrorCode::TooLarge,
                "Sylvester order 2^" + std::to_string(m) + " exceeds 1024");
  IntMatrix h = IntMatrix::Ones(1, 1);
  for (int step = 0; step < m; ++step) {
    const Eigen::Index n = h.rows();
    IntMatrix next(2 * n, 2 * n);
    next.topLeftCorner(n, n) = h;
    next.topRightCorner(n, n) = h;
    next.bottomLeftCorner(n, n) = h;
    next.bottomRightCorner(n, n) = -h;
    h = std::move(next);
  }
  return h;
}

IntMatrix paley_i_signs(std::uint32_t q) {
  if (q % 4 != 3)
    throw Error(ErrorCode::BadResidueClass,
                std::to_string(q) + " is not 3 mod 4");
  const FiniteField field(q);
  const Eigen::Index n = q + 1;
  IntMatrix h = IntMatrix::Identity(n, n);
  for (Eigen::Index j = 1; j < n; ++j) {
    h(0, j) += 1;
    h(j, 0) -= 1;
  }
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      h(a + 1, b + 1) += field.quadratic_character(field.sub(a, b));
  return h;
}

CMatrix sylvester(int m) { return sylvester_signs(m).cast<double>().cast<Complex>(); }

CMatrix paley_i(std::uint32_t q) {
  return paley_i_signs(q).cast<double>().cast<Complex>();
}

CMatrix dft(int n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "DFT order must be >= 1");
  CMatrix h(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      // reduce jk mod n first so large orders keep full phase accuracy
      const double phase =
          2.0 * std::numbers::pi * double((std::int64_t(j) * k) % n) / n;
      h(j, k) = std::polar(1.0, phase);
    }
  }
  return h;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace {

std::optional<RealHadamard> direct_hadamard(std::int64_t n) {
  if (n == 1) return RealHadamard{IntMatrix::Ones(1, 1), "sylvester(0)"};
  if (n == 2) return RealHadamard{sylvester_signs(1), "sylvester(1)"};
  if ((n & (n - 1)) == 0 && n <= kMaxHadamardOrder) {
    int m = 0;
    while ((std::int64_t(1) << m) < n) ++m;
    return RealHadamard{sylvester_signs(m), "sylvester(" + std::to_string(m) + ")"};
  }
  const std::int64_t q = n - 1;
  if (q % 4 == 3 && q <= 65536 && factor_prime_power(q).p != 0)
    return RealHadamard{paley_i_signs(static_cast<std::uint32_t>(q)),
                        "paley_i(" + std::to_string(q) + ")"};
  return std::nullopt;
}

}  // namespace

std::optional<RealHadamard> real_hadamard(std::int64_t n) {
  if (n < 1) return std::nullopt;
  if (n > 2 && n % 4 != 0) return std::nullopt;
  if (auto h = direct_hadamard(n)) return h;
  for (std::int64_t a = 2; a * a <= n; ++a) {
    if (n % a != 0) continue;
    auto left = real_hadamard(a);
    if (!left) continue;
    auto right = real_hadamard(n / a);
    if (!right) continue;
    return RealHadamard{kronecker(left->signs, right->signs),
                        "kron(" + left->recipe + "," + right->recipe + ")"};
  }
  return std::nullopt;
}

HadamardReport verify_hadamard(const CMatrix& h) {
  HadamardReport rep;
  rep.square = h.rows() == h.cols() && h.rows() > 0;
  if (!rep.square) return rep;
  const double n = static_cast<double>(h.rows());
  rep.max_modulus_deviation = (h.cwiseAbs().array() - 1.0).abs().maxCoeff();
  const CMatrix resid = h * h.adjoint() - n * CMatrix::Identity(h.rows(), h.rows());
  rep.orthogonality_residual = max_abs(resid);
  const double tol = entrywise_tolerance();
  rep.passed = rep.max_modulus_deviation < tol && rep.orthogonality_residual < tol * n;
  return rep;
}

bool is_hadamard_exact(const IntMatrix& h) {
  if (h.rows() != h.cols()) return false;
  if ((h.array().abs() != 1).any()) return false;
  const IntMatrix g = h * h.transpose();
  return g == IntMatrix::Identity(h.rows(), h.rows()) * h.rows();
}

}  // namespace etfkit
