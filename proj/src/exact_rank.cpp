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

#include "etfkit/exact_rank.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "etfkit/errors.hpp"

namespace etfkit {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Overflow {};

struct CheckedOps {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
};

struct BigOps {
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
};

template <typename T, typename Ops>
Eigen::Index bareiss_rank(std::vector<std::vector<T>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  T prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        T num = Ops::sub(Ops::mul(a[i][j], a[rank][c]), Ops::mul(a[i][c], a[rank][j]));
        a[i][j] = num / prev;  // exact by Sylvester's identity
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return static_cast<Eigen::Index>(rank);
}

template <typename T>
std::vector<std::vector<T>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<T>> rows(m.rows(), std::vector<T>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[i][j] = T(m(i, j));
  return rows;
}

}  // namespace

Eigen::Index exact_rank(const IntMatrix& m) {
  if (m.size() == 0) return 0;
  try {
    return bareiss_rank<std::int64_t, CheckedOps>(to_rows<std::int64_t>(m));
  } catch (const Overflow&) {
    return bareiss_rank<BigInt, BigOps>(to_rows<BigInt>(m));
  }
}

IntMatrix integer_kernel_basis(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto a = to_rows<Rational>(m);

  // Reduced row echelon form over Q.
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Rational lead = a[rank][c];
    for (std::size_t j = c; j < cols; ++j) a[rank][j] /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const Rational factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[rank][j];
    }
    pivot_cols.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  IntMatrix basis(static_cast<Eigen::Index>(cols - rank), static_cast<Eigen::Index>(cols));
  Eigen::Index out_row = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t i = 0; i < rank; ++i) x[pivot_cols[i]] = -a[i][free];
    BigInt lcm = 1;
    for (const auto& val : x) {
      const BigInt den = boost::multiprecision::denominator(val);
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational scaled = x[j] * Rational(lcm);
      const BigInt num = boost::multiprecision::numerator(scaled);
      if (num > std::numeric_limits<std::int64_t>::max() ||
          num < std::numeric_limits<std::int64_t>::min())
        throw Error(ErrorCode::DomainError, "kernel basis entry exceeds 64 bits");
      basis(out_row, static_cast<Eigen::Index>(j)) = num.convert_to<std::int64_t>();
    }
    ++out_row;
  }
  return basis;
}

std::optional<IntMatrix> integer_scaling(const CMatrix& v) {
  if (!is_exactly_real(v) || v.size() == 0) return std::nullopt;
  const RMatrix re = v.real();
  double unit = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < re.cols(); ++j)
    for (Eigen::Index i = 0; i < re.rows(); ++i)
      if (re(i, j) != 0.0) unit = std::min(unit, std::abs(re(i, j)));
  if (!std::isfinite(unit)) return std::nullopt;
  IntMatrix out(re.rows(), re.cols());
  for (Eigen::Index j = 0; j < re.cols(); ++j) {
    for (Eigen::Index i = 0; i < re.rows(); ++i) {
      const double scaled = re(i, j) / unit;
      const double rounded = std::round(scaled);
      if (std::abs(scaled - rounded) > 1e-9 * std::max(1.0, std::abs(rounded)))
        return std::nullopt;
      out(i, j) = static_cast<std::int64_t>(rounded);
    }
  }
  return out;
}

}  // namespace etfkit
