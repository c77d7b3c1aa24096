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

#include "etfkit/pert.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>

#include "etfkit/errors.hpp"

namespace etfkit {

namespace {

const double kSqrt2 = std::numbers::sqrt2;

void require_dense_size(Eigen::Index n) {
  if (n > kMaxDenseFrameSize)
    throw Error(ErrorCode::TooLargeForDense,
                "N=" + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxDenseFrameSize) + " for N^2 x N^2 forms");
}

}  // namespace

RVector hermitian_coordinates(const CMatrix& a) {
  const Eigen::Index n = a.rows();
  RVector c(n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    c(i * n + i) = a(i, i).real();
    for (Eigen::Index j = i + 1; j < n; ++j) {
      c(i * n + j) = kSqrt2 * a(i, j).real();
      c(j * n + i) = kSqrt2 * a(i, j).imag();
    }
  }
  return c;
}

CMatrix from_hermitian_coordinates(const RVector& coords, Eigen::Index n) {
  if (coords.size() != n * n)
    throw Error(ErrorCode::DimensionMismatch, "coordinate vector has wrong length");
  CMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, i) = coords(i * n + i);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Complex z(coords(i * n + j) / kSqrt2, coords(j * n + i) / kSqrt2);
      a(i, j) = z;
      a(j, i) = std::conj(z);
    }
  }
  return a;
}

CMatrix hermitian_basis_element(Eigen::Index n, Eigen::Index index) {
  RVector e = RVector::Zero(n * n);
  e(index) = 1.0;
  return from_hermitian_coordinates(e, n);
}

PertProjector::PertProjector(const Frame& f) : frame_(f) {
  const FrameReport rep = verify_frame(f);
  if (!rep.is_untf)
    throw Error(ErrorCode::NotUntf, "perturbation projector needs a UNTF");
  x_ = etfkit::gram(f).x;
  x2_ = abs_squared(x_);
  const RVector eig = symmetric_eigenvalues(x2_);
  const double hi = eig.cwiseAbs().maxCoeff();
  const double lo = eig.cwiseAbs().minCoeff();
  condition_ = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  if (!(condition_ <= kMaxOverlapCondition))
    throw Error(ErrorCode::SingularX2,
                "|X|^2 has condition number " + std::to_string(condition_));
  inv_x2_ = x2_.ldlt().solve(RMatrix::Identity(x2_.rows(), x2_.cols()));
}

CMatrix PertProjector::apply(const CMatrix& a) const {
  const Eigen::Index n = x_.rows();
  if (a.rows() != n || a.cols() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(n) + "x" + std::to_string(n) + " input");
  const CMatrix herm = (a + a.adjoint()) * 0.5;
  const CMatrix ax = herm * x_;
  RVector c(n);
  for (Eigen::Index i = 0; i < n; ++i) c(i) = x_.col(i).dot(ax.col(i)).real();
  const RVector g = inv_x2_ * c;
  CMatrix inner = herm;
  for (Eigen::Index i = 0; i < n; ++i) inner(i, i) -= g(i);
  const double r = double(frame_.dim());
  CMatrix out = (r * r / double(n * n)) * (x_ * inner * x_);
  return (out + out.adjoint()) * 0.5;
}

const RMatrix& PertProjector::dense() const {
  if (!dense_)
    throw Error(ErrorCode::DomainError, "projector built without dense form");
  return *dense_;
}

PertProjector PertProjector::with_dense(const Frame& f) {
  require_dense_size(f.size());
  PertProjector p(f);
  const Eigen::Index n = f.size();
  const Eigen::Index dim = n * n;
  RMatrix d(dim, dim);
  // Column b is the image of basis element b; columns are independent.
  for (Eigen::Index b = 0; b < dim; ++b)
    d.col(b) = hermitian_coordinates(p.apply(hermitian_basis_element(n, b)));
  p.dense_ = std::move(d);
  return p;
}

CMatrix project_pert(const Frame& f, const CMatrix& a) {
  return PertProjector(f).apply(a);
}

PertProjector pert_projector_dense(const Frame& f) {
  return PertProjector::with_dense(f);
}

RMatrix pert_oracle(const Frame& f) {
  require_dense_size(f.size());
  const CMatrix& v = f.synthesis();
  const Eigen::Index r = f.dim();
  const Eigen::Index n = f.size();

  // Linear constraints v_i* H v_i = 0 on the r^2 Hermitian coordinates of H.
  RMatrix constraints(n, r * r);
  for (Eigen::Index a = 0; a < r * r; ++a) {
    const CMatrix h = hermitian_basis_element(r, a);
    const CMatrix hv = h * v;
    for (Eigen::Index i = 0; i < n; ++i)
      constraints(i, a) = v.col(i).dot(hv.col(i)).real();
  }
  Eigen::JacobiSVD<RMatrix> svd(constraints, Eigen::ComputeFullV);
  const RVector& s = svd.singularValues();
  const double cut = s.size() && s(0) > 0 ? 1e-10 * s(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++rank;
  const Eigen::Index nullity = r * r - rank;
  if (nullity == 0) return RMatrix::Zero(n * n, n * n);
  const RMatrix null_basis = svd.matrixV().rightCols(nullity);

  RMatrix images(n * n, nullity);
  for (Eigen::Index k = 0; k < nullity; ++k) {
    const CMatrix h = from_hermitian_coordinates(null_basis.col(k), r);
    images.col(k) = hermitian_coordinates(v.adjoint() * h * v);
  }
  Eigen::JacobiSVD<RMatrix> img_svd(images, Eigen::ComputeThinU);
  const RVector& si = img_svd.singularValues();
  const double icut = si(0) * 1e-10;
  Eigen::Index img_rank = 0;
  for (Eigen::Index i = 0; i < si.size(); ++i)
    if (si(i) > icut) ++img_rank;
  const RMatrix q = img_svd.matrixU().leftCols(img_rank);
  return q * q.transpose();
}

OverlapReport overlap_inequality_check(const Frame& f) {
  const PertProjector p(f);
  const RMatrix w = abs_squared(f.synthesis());
  const Eigen::Index r = f.dim();
  const RMatrix x2 = abs_squared(p.gram());

  OverlapReport rep;
  rep.overlap_condition = p.overlap_condition();
  const RMatrix form1 = RMatrix::Identity(r, r) - w * p.inverse_overlap() * w.transpose();
  const RMatrix form2 = x2 - w.transpose() * w;
  rep.min_eig_identity_form = symmetric_eigenvalues(form1).minCoeff();
  rep.min_eig_gram_form = symmetric_eigenvalues(form2).minCoeff();
  rep.identity_form_holds = rep.min_eig_identity_form >= -kGapNegativeTolerance;
  rep.gram_form_holds = rep.min_eig_gram_form >= -kGapNegativeTolerance;
  rep.forms_agree = rep.identity_form_holds == rep.gram_form_holds;
  rep.passed = rep.identity_form_holds && rep.gram_form_holds;
  return rep;
}

RMatrix r_matrix(const Frame& f) {
  const RMatrix w = abs_squared(f.synthesis());
  return w * w.transpose();
}

std::vector<SpectrumCluster> cluster_spectrum(const RVector& ascending, double tol) {
  std::vector<SpectrumCluster> out;
  Eigen::Index start = 0;
  while (start < ascending.size()) {
    Eigen::Index end = start + 1;
    while (end < ascending.size() && ascending(end) - ascending(end - 1) <= tol) ++end;
    const Eigen::Index count = end - start;
    out.push_back({ascending.segment(start, count).mean(), count});
    start = end;
  }
  return out;
}

GapMatrix etf_gap(const Frame& f) {
  const FrameReport rep = verify_frame(f);
  if (!rep.is_etf) throw Error(ErrorCode::NotEtf, "gap matrix needs an ETF");
  const double n = double(f.size());
  const double r = double(f.dim());
  const auto rr = f.dim();

  GapMatrix g;
  g.identity_coeff = (1.0 - 1.0 / r) / (1.0 - 1.0 / n);
  g.ones_coeff = (n / r - 1.0) / (r * (1.0 - 1.0 / n));
  const RMatrix rhs = g.identity_coeff * RMatrix::Identity(rr, rr) +
                      g.ones_coeff * RMatrix::Ones(rr, rr);
  g.gap = rhs - r_matrix(f);
  g.eigenvalues = symmetric_eigenvalues(g.gap);
  g.min_eig = g.eigenvalues.minCoeff();
  const double kernel_cut = kGapKernelScale * r;
  for (Eigen::Index i = 0; i < g.eigenvalues.size(); ++i) {
    const double lam = g.eigenvalues(i);
    if (lam <= -kGapNegativeTolerance)
      ++g.negative_count;
    else if (lam < kernel_cut)
      ++g.kernel_dim;
    else
      ++g.positive_count;
  }
  g.passed = g.min_eig >= -kGapNegativeTolerance;
  g.spectrum = cluster_spectrum(g.eigenvalues, 1e-7);
  return g;
}

std::vector<SpectrumCluster> steiner_gap_prediction(const SteinerSystem& sys) {
  const double n = double(sys.v() * (1 + sys.rho()));
  const double r = double(sys.b());
  std::vector<SpectrumCluster> out{{0.0, Eigen::Index(sys.v())}};
  if (sys.b() > sys.v())
    out.push_back({(1.0 - 1.0 / r) / (1.0 - 1.0 / n), Eigen::Index(sys.b() - sys.v())});
  return out;
}

double sos_witness_scale(long long n, long long r) {
  const long long limit = r * (r + 1) / 2;
  if (n >= limit)
    throw Error(ErrorCode::GerzonSaturated,
                "N=" + std::to_string(n) + " reaches r(r+1)/2=" + std::to_string(limit));
  return double(n) * double(n) * (1.0 - 1.0 / double(r)) / double(limit - n);
}

RMatrix plain_vec_projector(const PertProjector& p) {
  if (!p.frame().is_real())
    throw Error(ErrorCode::ComplexFrame, "plain vec projector needs a real frame");
  const RMatrix& d = p.dense();
  const Eigen::Index n = p.frame().size();
  // Plain entry (a, b) is carried by the symmetric basis element at grid
  // position (min, max) with weight 1 on the diagonal, 1/sqrt(2) off it.
  auto sym_index = [n](Eigen::Index a, Eigen::Index b) {
    return std::min(a, b) * n + std::max(a, b);
  };
  auto weight = [](Eigen::Index a, Eigen::Index b) {
    return a == b ? 1.0 : 1.0 / kSqrt2;
  };
  const Eigen::Index dim = n * n;
  RMatrix out(dim, dim);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index e = 0; e < n; ++e) {
      const Eigen::Index col = c * n + e;
      const Eigen::Index t = sym_index(c, e);
      const double wt = weight(c, e);
      for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b)
          out(a * n + b, col) = weight(a, b) * wt * d(sym_index(a, b), t);
    }
  }
  return out;
}

RMatrix sos_witness(const Frame& f) {
  if (!f.is_real()) throw Error(ErrorCode::ComplexFrame, "witness needs a real ETF");
  const FrameReport rep = verify_frame(f);
  if (!rep.is_etf) throw Error(ErrorCode::NotEtf, "witness needs an ETF");
  const double c = sos_witness_scale(f.size(), f.dim());
  require_dense_size(f.size());

  const PertProjector p = PertProjector::with_dense(f);
  const RMatrix x = p.gram().real();
  const Eigen::Index n = f.size();
  RVector vec_x(n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) vec_x(i * n + j) = x(i, j);
  return vec_x * vec_x.transpose() + c * plain_vec_projector(p);
}

E4Report verify_e4_membership(const RMatrix& y, const RMatrix& x) {
  const Eigen::Index n = x.rows();
  if (x.cols() != n || y.rows() != n * n || y.cols() != n * n)
    throw Error(ErrorCode::DimensionMismatch,
                "Y must be N^2 x N^2 for an N x N matrix X");
  E4Report rep;

  // Key: count of odd-multiplicity indices followed by the sorted indices,
  // packed base (n + 1).
  auto odd_key = [n](std::array<Eigen::Index, 4> idx) {
    std::sort(idx.begin(), idx.end());
    std::uint64_t key = 0;
    int odd = 0;
    for (std::size_t i = 0; i < 4;) {
      std::size_t j = i;
      while (j < 4 && idx[j] == idx[i]) ++j;
      if ((j - i) % 2 == 1) {
        key = key * std::uint64_t(n + 1) + std::uint64_t(idx[i] + 1);
        ++odd;
      }
      i = j;
    }
    return std::pair<std::uint64_t, int>{key, odd};
  };

  struct Acc {
    double sum = 0.0;
    std::size_t count = 0;
  };
  std::unordered_map<std::uint64_t, Acc> groups;
  auto for_each_entry = [&](auto&& fn) {
    for (Eigen::Index i1 = 0; i1 < n; ++i1)
      for (Eigen::Index i2 = 0; i2 < n; ++i2)
        for (Eigen::Index j1 = 0; j1 < n; ++j1)
          for (Eigen::Index j2 = 0; j2 < n; ++j2) {
            const auto [key, odd] = odd_key({i1, i2, j1, j2});
            fn(y(i1 * n + i2, j1 * n + j2), key, odd);
          }
  };
  for_each_entry([&](double val, std::uint64_t key, int odd) {
    if (odd == 0) {
      rep.even_entries_deviation = std::max(rep.even_entries_deviation, std::abs(val - 1.0));
    } else {
      auto& acc = groups[key];
      acc.sum += val;
      ++acc.count;
    }
  });
  for_each_entry([&](double val, std::uint64_t key, int odd) {
    if (odd == 0) return;
    const auto& acc = groups.at(key);
    rep.odd_group_deviation =
        std::max(rep.odd_group_deviation, std::abs(val - acc.sum / double(acc.count)));
  });

  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      rep.gram_corner_deviation =
          std::max(rep.gram_corner_deviation, std::abs(y(i, j) - x(i, j)));

  rep.asymmetry = max_abs(RMatrix(y - y.transpose()));
  const RVector eig = symmetric_eigenvalues(y);
  rep.min_eig = eig.minCoeff();
  rep.spectral_norm = eig.cwiseAbs().maxCoeff();

  rep.even_entries_ok = rep.even_entries_deviation <= kE4Tolerance;
  rep.odd_groups_ok = rep.odd_group_deviation <= kE4Tolerance;
  rep.gram_corner_ok = rep.gram_corner_deviation <= kE4Tolerance;
  rep.psd_ok = rep.asymmetry <= kE4Tolerance &&
               rep.min_eig >= -kE4Tolerance * rep.spectral_norm;
  rep.passed = rep.even_entries_ok && rep.odd_groups_ok && rep.gram_corner_ok && rep.psd_ok;
  return rep;
}

}  // namespace etfkit
