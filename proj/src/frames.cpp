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

#include "etfkit/frames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "etfkit/errors.hpp"
#include "etfkit/hadamard.hpp"

namespace etfkit {

namespace {

constexpr double kRankTolerance = 1e-10;

double aggregate_tolerance(Eigen::Index n) { return 1e-7 * double(n); }

std::array<double, 3> untf_residuals(const CMatrix& v, const CMatrix& x) {
  const auto r = v.rows();
  const auto n = v.cols();
  const double ratio = double(n) / double(r);
  std::array<double, 3> res{};
  res[0] = (v * v.adjoint() - ratio * CMatrix::Identity(r, r)).norm();
  const RVector eig = hermitian_eigenvalues(x);
  double dev = 0.0;
  for (Eigen::Index i = n - r; i < n; ++i)
    dev = std::max(dev, std::abs(eig(i) - ratio));
  res[1] = dev;
  res[2] = std::abs(x.squaredNorm() - double(n) * double(n) / double(r));
  return res;
}

bool untf_passes(const std::array<double, 3>& res, Eigen::Index n) {
  const double tol = aggregate_tolerance(n);
  return res[0] < tol && res[1] < tol && res[2] < tol;
}

}  // namespace

Frame Frame::from_synthesis(CMatrix v) {
  const auto r = v.rows();
  const auto n = v.cols();
  if (r < 1 || n < 1)
    throw Error(ErrorCode::NotAFrame, "empty synthesis matrix");
  if (r > n)
    throw Error(ErrorCode::NotAFrame,
                "r=" + std::to_string(r) + " exceeds N=" + std::to_string(n));
  if (!v.allFinite()) throw Error(ErrorCode::NotAFrame, "non-finite entry");
  const double tol = entrywise_tolerance();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double norm = v.col(i).norm();
    if (std::abs(norm - 1.0) >= tol)
      throw Error(ErrorCode::NotAFrame,
                  "column " + std::to_string(i) + " has norm " + std::to_string(norm));
  }
  if (numerical_rank(v, kRankTolerance) != r)
    throw Error(ErrorCode::NotAFrame, "synthesis matrix is rank deficient");
  const bool real = is_exactly_real(v);
  return Frame(std::move(v), real);
}

GramMatrix gram(const Frame& f) {
  const CMatrix& v = f.synthesis();
  GramMatrix g;
  CMatrix x = v.adjoint() * v;
  g.x = (x + x.adjoint()) * 0.5;
  const auto n = g.x.rows();
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != j) g.coherence = std::max(g.coherence, std::abs(g.x(i, j)));
  return g;
}

double welch_bound(long long n, long long r) {
  if (n < 2 || r < 1 || r > n)
    throw Error(ErrorCode::DomainError,
                "Welch bound needs 1 <= r <= N, N >= 2 (N=" + std::to_string(n) +
                    ", r=" + std::to_string(r) + ")");
  return std::sqrt(double(n - r) / (double(r) * double(n - 1)));
}

long long gerzon_limit(bool real, long long r) {
  if (r < 1) throw Error(ErrorCode::DomainError, "Gerzon limit needs r >= 1");
  return real ? r * (r + 1) / 2 : r * r;
}

FrameReport verify_frame(const Frame& f) {
  FrameReport rep;
  rep.n = f.size();
  rep.r = f.dim();
  const GramMatrix g = gram(f);
  rep.untf_residuals = untf_residuals(f.synthesis(), g.x);
  rep.is_untf = untf_passes(rep.untf_residuals, rep.n);

  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (Eigen::Index j = 0; j < rep.n; ++j) {
    for (Eigen::Index i = 0; i < rep.n; ++i) {
      if (i == j) continue;
      const double m = std::abs(g.x(i, j));
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
  }
  if (rep.n < 2) lo = hi = 0.0;
  rep.coherence = hi;
  rep.coherence_spread = hi - lo;

  const double tol = entrywise_tolerance();
  rep.is_etf = rep.is_untf && rep.coherence_spread < tol;
  rep.welch = rep.n >= 2 ? welch_bound(rep.n, rep.r) : 0.0;
  rep.welch_equality = std::abs(rep.coherence - rep.welch) < tol;
  rep.gerzon_limit_real = gerzon_limit(true, rep.r);
  rep.gerzon_limit_complex = gerzon_limit(false, rep.r);

  if (rep.is_etf && rep.coherence < 1.0 - tol) {
    const long long limit = f.is_real() ? rep.gerzon_limit_real : rep.gerzon_limit_complex;
    if (rep.n > limit)
      throw Error(ErrorCode::GerzonViolation,
                  "ETF of " + std::to_string(rep.n) + " vectors in dimension " +
                      std::to_string(rep.r) + " exceeds Gerzon limit " +
                      std::to_string(limit));
  }
  return rep;
}

Frame simplex_etf(int r) {
  if (r < 1) throw Error(ErrorCode::DomainError, "simplex ETF needs r >= 1");
  const Eigen::Index n = r + 1;
  RMatrix u = RMatrix::Zero(r, n);
  for (int k = 1; k <= r; ++k) {
    const double s = 1.0 / std::sqrt(double(k) * double(k + 1));
    for (int j = 0; j < k; ++j) u(k - 1, j) = s;
    u(k - 1, k) = -double(k) * s;
  }
  u *= std::sqrt(double(r + 1) / double(r));
  return Frame::from_synthesis(u.cast<Complex>());
}

Frame steiner_etf(const SteinerSystem& sys, const CMatrix& h) {
  const std::size_t rho = sys.rho();
  SteinerRowAssignment rows(sys.v());
  for (auto& r : rows) {
    r.resize(rho);
    for (std::size_t s = 0; s < rho; ++s) r[s] = s + 1;
  }
  return steiner_etf(sys, h, rows);
}

Frame steiner_etf(const SteinerSystem& sys, const CMatrix& h,
                  const SteinerRowAssignment& rows) {
  const std::size_t rho = sys.rho();
  const auto order = static_cast<Eigen::Index>(rho + 1);
  if (h.rows() != order || h.cols() != order)
    throw Error(ErrorCode::SizeMismatch,
                "Hadamard matrix must be " + std::to_string(order) + "x" +
                    std::to_string(order));
  if (!verify_hadamard(h).passed)
    throw Error(ErrorCode::NotHadamard, "matrix fails the Hadamard check");
  const auto design = verify_steiner(sys);
  if (!design.passed)
    throw Error(ErrorCode::InvalidDesign, "not a (2, k, v)-Steiner system");
  if (rows.size() != sys.v())
    throw Error(ErrorCode::SizeMismatch, "row assignment needs one entry per point");

  const Eigen::Index b = static_cast<Eigen::Index>(sys.b());
  const Eigen::Index n = static_cast<Eigen::Index>(sys.v()) * order;
  CMatrix v = CMatrix::Zero(b, n);
  for (std::size_t j = 0; j < sys.v(); ++j) {
    const auto incident = sys.blocks_through(j);
    const auto& assigned = rows[j];
    if (incident.size() != rho || assigned.size() != rho)
      throw Error(ErrorCode::InvalidDesign,
                  "point " + std::to_string(j) + " lies in " +
                      std::to_string(incident.size()) + " blocks, expected " +
                      std::to_string(rho));
    std::vector<bool> used(rho + 1, false);
    for (std::size_t s = 0; s < rho; ++s) {
      const auto row = assigned[s];
      if (row > rho || used[row])
        throw Error(ErrorCode::SizeMismatch,
                    "row assignment for point " + std::to_string(j) +
                        " must use distinct rows of H");
      used[row] = true;
      v.block(static_cast<Eigen::Index>(incident[s]),
              static_cast<Eigen::Index>(j) * order, 1, order) = h.row(row);
    }
  }
  v /= std::sqrt(double(rho));
  return Frame::from_synthesis(std::move(v));
}

Frame naimark_complement(const Frame& f) {
  const auto r = f.dim();
  const auto n = f.size();
  if (r == n)
    throw Error(ErrorCode::FullRank, "frame spans its space; no complement");
  const GramMatrix g = gram(f);
  if (!untf_passes(untf_residuals(f.synthesis(), g.x), n))
    throw Error(ErrorCode::NotUntf, "Naimark complement needs a tight frame");

  const double scale = std::sqrt(double(n) / double(n - r));
  CMatrix out;
  if (f.is_real()) {
    const RMatrix vt = f.synthesis().real().transpose();
    Eigen::HouseholderQR<RMatrix> qr(vt);
    const RMatrix q = qr.householderQ();
    out = (scale * q.rightCols(n - r).transpose()).cast<Complex>();
  } else {
    Eigen::HouseholderQR<CMatrix> qr(f.synthesis().adjoint());
    const CMatrix q = qr.householderQ();
    out = scale * q.rightCols(n - r).adjoint();
  }
  // columns are unit norm in exact arithmetic; drop the rounding drift
  for (Eigen::Index i = 0; i < n; ++i) out.col(i) /= out.col(i).norm();
  return Frame::from_synthesis(std::move(out));
}

}  // namespace etfkit
