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

#include "etfkit/sparsity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "etfkit/errors.hpp"
#include "etfkit/exact_rank.hpp"

namespace etfkit {

namespace {

using Subset = std::vector<Eigen::Index>;
using ColumnRank = std::function<Eigen::Index(const Subset&)>;

constexpr double kBoundSlack = 1e-9;

// k-subsets of {0..n-1} in colexicographic order.
class ColexSubsets {
 public:
  ColexSubsets(Eigen::Index n, Eigen::Index k) : n_(n), c_(k) {
    for (Eigen::Index i = 0; i < k; ++i) c_[i] = i;
  }

  const Subset& current() const { return c_; }

  bool next() {
    const auto k = static_cast<Eigen::Index>(c_.size());
    for (Eigen::Index i = 0; i < k; ++i) {
      const Eigen::Index limit = (i + 1 < k) ? c_[i + 1] : n_;
      if (c_[i] + 1 < limit) {
        ++c_[i];
        for (Eigen::Index j = 0; j < i; ++j) c_[j] = j;
        return true;
      }
    }
    return false;
  }

 private:
  Eigen::Index n_;
  Subset c_;
};

// C(n, k), saturating at just above the subset budget.
std::uint64_t binomial_saturating(Eigen::Index n, Eigen::Index k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long double acc = 1.0L;
  for (Eigen::Index i = 1; i <= k; ++i) {
    acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (acc > static_cast<long double>(kSubsetBudget) * 2) return kSubsetBudget * 2;
  }
  return static_cast<std::uint64_t>(std::llround(static_cast<double>(acc)));
}

void charge_budget(std::uint64_t& examined, Eigen::Index n, Eigen::Index size) {
  const std::uint64_t count = binomial_saturating(n, size);
  if (examined + count > kSubsetBudget)
    throw Error(ErrorCode::BudgetExceeded,
                "enumerating " + std::to_string(size) + "-subsets of " +
                    std::to_string(n) + " columns exceeds the subset budget");
  examined += count;
}

ColumnRank exact_ranker(IntMatrix m) {
  return [m = std::move(m)](const Subset& cols) {
    IntMatrix sub(m.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) sub.col(j) = m.col(cols[j]);
    return exact_rank(sub);
  };
}

// rank V_S = rank X_SS, so an integer-scalable Gram matrix also gives exact
// column ranks.
ColumnRank gram_ranker(IntMatrix x) {
  return [x = std::move(x)](const Subset& cols) {
    const auto s = static_cast<Eigen::Index>(cols.size());
    IntMatrix sub(s, s);
    for (Eigen::Index i = 0; i < s; ++i)
      for (Eigen::Index j = 0; j < s; ++j) sub(i, j) = x(cols[i], cols[j]);
    return exact_rank(sub);
  };
}

ColumnRank numeric_ranker(const CMatrix& v) {
  return [&v](const Subset& cols) {
    CMatrix sub(v.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) sub.col(j) = v.col(cols[j]);
    return numerical_rank(sub, double(cols.size()) * 1e-9);
  };
}

struct ChosenRanker {
  ColumnRank rank;
  bool exact = false;
};

ChosenRanker choose_ranker(const Frame& f, RankMethod method) {
  if (method != RankMethod::Numeric) {
    if (auto scaled = integer_scaling(f.synthesis()))
      return {exact_ranker(std::move(*scaled)), true};
    if (f.is_real()) {
      if (auto scaled = integer_scaling(CMatrix(gram(f).x.real().cast<Complex>())))
        return {gram_ranker(std::move(*scaled)), true};
    }
    if (method == RankMethod::Exact)
      throw Error(ErrorCode::DomainError,
                  "exact ranks need a synthesis or Gram matrix in a single integer "
                  "scale");
  }
  return {numeric_ranker(f.synthesis()), false};
}

SparkResult enumerate_spark(Eigen::Index n, Eigen::Index cap, const ColumnRank& rank) {
  if (n > 40 && cap > 8)
    throw Error(ErrorCode::BudgetExceeded,
                "spark enumeration limited to N <= 40 or cap <= 8");
  SparkResult res;
  res.cap = cap;
  for (Eigen::Index s = 1; s <= cap; ++s) {
    charge_budget(res.subsets_examined, n, s);
    ColexSubsets it(n, s);
    do {
      if (rank(it.current()) < s) {
        res.spark = s;
        res.witness = it.current();
        return res;
      }
    } while (it.next());
  }
  return res;
}

Eigen::Index resolve_cap(std::optional<Eigen::Index> cap, Eigen::Index r, Eigen::Index n) {
  const Eigen::Index c = cap.value_or(r + 1);
  if (c < 1) throw Error(ErrorCode::DomainError, "spark cap must be >= 1");
  return std::min(c, n);
}

}  // namespace

SparkResult spark_exact(const Frame& f, std::optional<Eigen::Index> cap, RankMethod method) {
  const Eigen::Index c = resolve_cap(cap, f.dim(), f.size());
  const ChosenRanker ranker = choose_ranker(f, method);
  SparkResult res = enumerate_spark(f.size(), c, ranker.rank);
  res.exact_arithmetic = ranker.exact;
  return res;
}

SparkResult complement_spark_exact(const Frame& f, std::optional<Eigen::Index> cap) {
  const auto scaled = integer_scaling(f.synthesis());
  if (!scaled)
    throw Error(ErrorCode::DomainError,
                "complement spark needs an integer-scalable real frame");
  const Eigen::Index n = f.size();
  if (f.dim() == n) throw Error(ErrorCode::FullRank, "frame has no complement");
  IntMatrix kernel = integer_kernel_basis(*scaled);
  const Eigen::Index c = resolve_cap(cap, kernel.rows(), n);
  SparkResult res = enumerate_spark(n, c, exact_ranker(std::move(kernel)));
  res.exact_arithmetic = true;
  return res;
}

CosparkResult cospark_exact(const Frame& f, RankMethod method) {
  const Eigen::Index n = f.size();
  const Eigen::Index r = f.dim();
  const ChosenRanker ranker = choose_ranker(f, method);
  CosparkResult res;
  res.exact_arithmetic = ranker.exact;
  for (Eigen::Index s = n - 1; s >= 0; --s) {
    charge_budget(res.subsets_examined, n, s);
    ColexSubsets it(n, s);
    do {
      const Subset& cols = it.current();
      if (s == 0 || ranker.rank(cols) <= r - 1) {
        res.cospark = n - s;
        std::vector<bool> in(n, false);
        for (auto c : cols) in[c] = true;
        for (Eigen::Index j = 0; j < n; ++j)
          if (!in[j]) res.support.push_back(j);
        return res;
      }
    } while (it.next());
  }
  return res;  // unreachable: the empty set always qualifies
}

double gershgorin_bound(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw Error(ErrorCode::DomainError, "Gershgorin bound needs 0 < alpha < 1");
  return 1.0 + 1.0 / alpha;
}

double nerf_bound(long long n, long long r) {
  if (r < 1 || r >= n)
    throw Error(ErrorCode::DomainError, "NERF bound needs 1 <= r < N");
  const double gap = double(n - r);
  return double(n) / (1.0 + gap * (gap - 1.0) / double(n - 1));
}

CorollaryBounds corollary_bounds(long long n, long long r) {
  if (r < 1 || r >= n)
    throw Error(ErrorCode::DomainError, "corollary bounds need 1 <= r < N");
  const double nn = double(n);
  const double rm1 = double(r - 1);
  const double cm1 = double(n - r - 1);
  return {nn / (1.0 + rm1 * rm1 / (nn - 1.0)), nn / (1.0 + cm1 * cm1 / (nn - 1.0))};
}

bool BoundReport::all_valid() const {
  for (const auto& flag :
       {gershgorin_valid, nerf_valid, corollary_spark_valid, corollary_sparsity_valid})
    if (flag && !*flag) return false;
  return true;
}

BoundReport bound_report(const Frame& f, bool exact, std::optional<Eigen::Index> cap) {
  BoundReport rep;
  rep.n = f.size();
  rep.r = f.dim();
  rep.coherence = gram(f).coherence;
  if (rep.coherence > 0.0 && rep.coherence < 1.0)
    rep.gershgorin = gershgorin_bound(rep.coherence);
  if (rep.r < rep.n) {
    rep.nerf = nerf_bound(rep.n, rep.r);
    const auto cb = corollary_bounds(rep.n, rep.r);
    rep.corollary_spark = cb.spark_lb;
    rep.corollary_sparsity = cb.sparsity_lb;
  }
  if (!exact) return rep;

  const SparkResult spark = spark_exact(f, cap);
  rep.spark_cap = spark.cap;
  rep.spark_exact = spark.spark;
  rep.spark_above_cap = spark.above_cap();
  rep.exact_arithmetic = spark.exact_arithmetic;
  try {
    rep.cospark_exact = cospark_exact(f).cospark;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
  }

  auto check_spark = [&](const std::optional<double>& bound) -> std::optional<bool> {
    if (!bound) return std::nullopt;
    if (rep.spark_exact) return double(*rep.spark_exact) >= *bound - kBoundSlack;
    // spark > cap: only bounds at or below cap + 1 are decided
    if (double(rep.spark_cap + 1) >= *bound - kBoundSlack) return true;
    return std::nullopt;
  };
  rep.gershgorin_valid = check_spark(rep.gershgorin);
  rep.nerf_valid = check_spark(rep.nerf);
  rep.corollary_spark_valid = check_spark(rep.corollary_spark);
  if (rep.corollary_sparsity && rep.cospark_exact)
    rep.corollary_sparsity_valid =
        double(*rep.cospark_exact) >= *rep.corollary_sparsity - kBoundSlack;
  return rep;
}

OverlapDeviationReport overlap_deviation_check(const Frame& f, Eigen::Index a_idx,
                                               Eigen::Index b_idx) {
  const Eigen::Index rows = f.dim();
  if (a_idx < 0 || b_idx < 0 || a_idx >= rows || b_idx >= rows)
    throw Error(ErrorCode::IndexOutOfRange,
                "row index outside [0, " + std::to_string(rows) + ")");
  if (a_idx == b_idx)
    throw Error(ErrorCode::IndexOutOfRange, "rows must be distinct");
  if (!verify_frame(f).is_etf)
    throw Error(ErrorCode::NotEtf, "overlap corollary needs an ETF");

  const double n = double(f.size());
  const double r = double(rows);
  const RMatrix w = abs_squared(f.synthesis());
  OverlapDeviationReport rep;
  rep.d = (n / (r * r)) * (1.0 + (r - 1.0) * (r - 1.0) / (n - 1.0));
  rep.e = (n / r - 1.0) / (r * (1.0 - 1.0 / n));
  rep.fourth_power_a = w.row(a_idx).squaredNorm();
  rep.fourth_power_b = w.row(b_idx).squaredNorm();
  rep.overlap = w.row(a_idx).dot(w.row(b_idx));
  rep.lhs = (rep.overlap - rep.e) * (rep.overlap - rep.e);
  rep.rhs = (rep.d - rep.fourth_power_a) * (rep.d - rep.fourth_power_b);
  rep.passed = rep.d >= rep.fourth_power_a - kBoundSlack &&
               rep.d >= rep.fourth_power_b - kBoundSlack && rep.lhs <= rep.rhs + kBoundSlack;
  return rep;
}

std::string to_string(Table1Family family) {
  switch (family) {
    case Table1Family::SteinerAffine: return "steiner_affine";
    case Table1Family::SteinerProjective: return "steiner_projective";
    case Table1Family::PolyphaseBibd: return "polyphase_bibd";
    case Table1Family::Hyperovals: return "hyperovals";
  }
  return "unknown";
}

bool FamilyRow::gershgorin_match() const {
  return std::abs(gershgorin - double(table_gershgorin)) <= 1.0;
}
bool FamilyRow::nerf_match() const { return std::abs(nerf - double(table_nerf)) <= 1.0; }
bool FamilyRow::ours_match() const { return std::abs(ours - double(table_ours)) <= 1.0; }

std::vector<FamilyRow> table1(long long q) {
  if (q < 2) throw Error(ErrorCode::DomainError, "table parameter q must be >= 2");
  const long long q2 = q * q, q3 = q2 * q;
  struct Params {
    Table1Family family;
    long long n, r, g, nerf, ours;
  };
  const Params params[] = {
      {Table1Family::SteinerAffine, q3 + 2 * q2, q2 + q, q2 + q, q2 + q - 1, q2 + q},
      {Table1Family::SteinerProjective, q3 + 3 * q2 + 3 * q + 2, q2 + q + 1, q2 + 2 * q + 2,
       q2 + 3 * q + 1, q2 + 3 * q + 2},
      {Table1Family::PolyphaseBibd, q3 + 1, q2 - q + 1, q2 + 1, q2 + q - 1, q2 + q},
      {Table1Family::Hyperovals, q3 + q2 - q, q2 + q - 1, q2, q2 - q + 3, q2 - q + 4},
  };
  std::vector<FamilyRow> rows;
  for (const auto& p : params) {
    FamilyRow row;
    row.family = p.family;
    row.q = q;
    row.n = p.n;
    row.r = p.r;
    const long long complement_dim = p.n - p.r;
    row.gershgorin = gershgorin_bound(welch_bound(p.n, complement_dim));
    row.nerf = nerf_bound(p.n, complement_dim);
    row.ours = corollary_bounds(p.n, p.r).sparsity_lb;
    row.table_gershgorin = p.g;
    row.table_nerf = p.nerf;
    row.table_ours = p.ours;
    rows.push_back(row);
  }
  return rows;
}

double crossover_difference(long long r, double beta) {
  const long long gap = std::llround(std::pow(double(r), beta));
  const long long n = r + gap;
  return nerf_bound(n, r) - gershgorin_bound(welch_bound(n, r));
}

}  // namespace etfkit
