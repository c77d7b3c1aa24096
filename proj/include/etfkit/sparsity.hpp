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
#include <optional>
#include <string>
#include <vector>

#include "etfkit/frames.hpp"

namespace etfkit {

/// Upper limit on the number of column subsets one enumeration may examine.
inline constexpr std::uint64_t kSubsetBudget = 100'000'000;

enum class RankMethod {
  /// Exact integer ranks when the synthesis matrix (real Steiner ETFs) or
  /// the real Gram matrix (simplices, Naimark complements of either) is an
  /// integer multiple of a single scale; singular values otherwise.
  Auto,
  Exact,
  Numeric,
};

struct SparkResult {
  /// Empty when no dependency exists among at most `cap` columns.
  std::optional<Eigen::Index> spark;
  Eigen::Index cap = 0;
  /// Colexicographically first dependent set of minimal size.
  std::vector<Eigen::Index> witness;
  bool exact_arithmetic = false;
  std::uint64_t subsets_examined = 0;

  bool above_cap() const { return !spark.has_value(); }
};

/// Smallest number of linearly dependent columns of V, by enumeration in
/// ascending size and colex order. `cap` defaults to r + 1 (clamped to N).
/// Numeric ranks count singular values above s * 1e-9 * sigma_max for an
/// s-column subset. Throws Error(BudgetExceeded).
SparkResult spark_exact(const Frame& f, std::optional<Eigen::Index> cap = std::nullopt,
                        RankMethod method = RankMethod::Auto);

/// Spark of the Naimark complement computed without forming it: the
/// complement's rows span ker V, so its column ranks are those of an exact
/// integer basis of ker V. Requires an integer-scalable real frame
/// (Error(DomainError) otherwise).
SparkResult complement_spark_exact(const Frame& f,
                                   std::optional<Eigen::Index> cap = std::nullopt);

struct CosparkResult {
  Eigen::Index cospark = 0;
  /// Support of a sparsest nonzero row-space vector (complement of the
  /// largest column set of rank <= r - 1, colex-first at that size).
  std::vector<Eigen::Index> support;
  bool exact_arithmetic = false;
  std::uint64_t subsets_examined = 0;
};

/// min ||x||_0 over nonzero x in row(V), as N - max{|S| : rank V_S <= r-1}
/// with |S| enumerated downward. Throws Error(BudgetExceeded).
CosparkResult cospark_exact(const Frame& f, RankMethod method = RankMethod::Auto);

/// 1 + 1/alpha, for 0 < alpha < 1.
double gershgorin_bound(double alpha);

/// N (1 + (N-r)(N-r-1)/(N-1))^{-1}, for 1 <= r < N.
double nerf_bound(long long n, long long r);

struct CorollaryBounds {
  /// N (1 + (r-1)^2/(N-1))^{-1}
  double sparsity_lb = 0.0;
  /// N (1 + (N-r-1)^2/(N-1))^{-1}
  double spark_lb = 0.0;
};

CorollaryBounds corollary_bounds(long long n, long long r);

struct BoundReport {
  Eigen::Index n = 0;
  Eigen::Index r = 0;
  double coherence = 0.0;
  std::optional<double> gershgorin;
  std::optional<double> nerf;
  std::optional<double> corollary_spark;
  std::optional<double> corollary_sparsity;

  std::optional<Eigen::Index> spark_exact;
  bool spark_above_cap = false;
  Eigen::Index spark_cap = 0;
  std::optional<Eigen::Index> cospark_exact;
  bool exact_arithmetic = false;

  /// exact >= bound - 1e-9; empty when either side is unavailable.
  std::optional<bool> gershgorin_valid;
  std::optional<bool> nerf_valid;
  std::optional<bool> corollary_spark_valid;
  std::optional<bool> corollary_sparsity_valid;

  bool all_valid() const;
};

/// Lower bounds for the frame's spark and cospark; with `exact`, also the
/// enumerated values and the validity of every bound against them.
BoundReport bound_report(const Frame& f, bool exact,
                         std::optional<Eigen::Index> cap = std::nullopt);

struct OverlapDeviationReport {
  double d = 0.0;
  double e = 0.0;
  double fourth_power_a = 0.0;
  double fourth_power_b = 0.0;
  double overlap = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool passed = false;
};

/// For rows a, b of an ETF synthesis matrix:
///   D >= ||a||_4^4, D >= ||b||_4^4 and
///   (<|a|^2, |b|^2> - E)^2 <= (D - ||a||_4^4)(D - ||b||_4^4),
/// D = (N/r^2)(1 + (r-1)^2/(N-1)), E = (N/r - 1)/(r(1 - 1/N)).
/// Throws Error(NotEtf) or Error(IndexOutOfRange).
OverlapDeviationReport overlap_deviation_check(const Frame& f, Eigen::Index a_idx,
                                               Eigen::Index b_idx);

enum class Table1Family { SteinerAffine, SteinerProjective, PolyphaseBibd, Hyperovals };

std::string to_string(Table1Family family);

struct FamilyRow {
  Table1Family family{};
  long long q = 0;
  long long n = 0;
  long long r = 0;
  double gershgorin = 0.0;
  double nerf = 0.0;
  double ours = 0.0;
  long long table_gershgorin = 0;
  long long table_nerf = 0;
  long long table_ours = 0;

  /// |computed - table| <= 1
  bool gershgorin_match() const;
  bool nerf_match() const;
  bool ours_match() const;
};

/// Bounds on the spark of the Naimark complement (N vectors in dimension
/// N - r) of each family member with parameter q: Gershgorin at
/// welch(N, N-r), NERF at (N, N-r), and the corollary sparsity bound at
/// (N, r); alongside the closed-form table polynomials.
std::vector<FamilyRow> table1(long long q);

/// NERF minus Gershgorin spark bounds for N - r = round(r^beta).
double crossover_difference(long long r, double beta);

}  // namespace etfkit
