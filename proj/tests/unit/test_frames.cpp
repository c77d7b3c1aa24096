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

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "etfkit/errors.hpp"
#include "etfkit/frames.hpp"
#include "support/random_frames.hpp"

using namespace etfkit;
using namespace etfkit::testing;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an etfkit::Error");
  return ErrorCode::IoError;
}

double max_offdiag_abs_dev(const CMatrix& x, double target) {
  double dev = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      if (i != j) dev = std::max(dev, std::abs(std::abs(x(i, j)) - target));
  return dev;
}

}  // namespace

TEST_CASE("welch and gerzon values") {
  CHECK(welch_bound(16, 6) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(welch_bound(28, 7) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(welch_bound(5, 5) == 0.0);
  CHECK(code_of([] { welch_bound(3, 4); }) == ErrorCode::DomainError);
  CHECK(gerzon_limit(true, 7) == 28);
  CHECK(gerzon_limit(false, 3) == 9);
  CHECK(gerzon_limit(true, 1) == 1);
}

TEST_CASE("simplex ETFs") {
  const Frame s1 = simplex_etf(1);
  RMatrix x1(2, 2);
  x1 << 1, -1, -1, 1;
  CHECK((gram(s1).x.real() - x1).cwiseAbs().maxCoeff() < 1e-12);

  const Frame s3 = simplex_etf(3);
  const auto g = gram(s3);
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j)
      if (i != j) CHECK(std::abs(g.x(i, j) - Complex(-1.0 / 3)) < 1e-12);
  CHECK(s3.synthesis().rowwise().sum().norm() < 1e-12);
  auto rep = verify_frame(s3);
  CHECK(rep.is_etf);
  CHECK(rep.coherence == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(std::abs(rep.welch - welch_bound(4, 3)) < 1e-15);
  CHECK(s3.is_real());
}

TEST_CASE("gram of trivial frames") {
  const Frame one = Frame::from_synthesis(CMatrix::Ones(1, 1));
  CHECK(gram(one).x == CMatrix::Ones(1, 1));
  auto rep = verify_frame(orthonormal_basis(5));
  CHECK(rep.is_untf);
  CHECK(rep.coherence == 0.0);
  CHECK(rep.welch == 0.0);
  CHECK(rep.is_etf);
}

TEST_CASE("frame construction validation") {
  CMatrix not_unit = CMatrix::Identity(2, 2) * 2.0;
  CHECK(code_of([&] { Frame::from_synthesis(not_unit); }) == ErrorCode::NotAFrame);
  CMatrix rank_def(2, 2);
  rank_def << 1, 1, 0, 0;
  CHECK(code_of([&] { Frame::from_synthesis(rank_def); }) == ErrorCode::NotAFrame);
  CHECK(code_of([&] { Frame::from_synthesis(CMatrix::Identity(3, 2)); }) == ErrorCode::NotAFrame);
}

TEST_CASE("random unit vectors are generically not tight") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    const Frame f = Frame::from_synthesis(random_unit_columns(rng, 3, 3, true));
    CHECK_FALSE(verify_frame(f).is_untf);
  }
}

TEST_CASE("steiner ETFs from the affine plane of order 2") {
  const auto sys = affine_plane(2);
  const Frame f = steiner_etf(sys, sylvester(2));
  CHECK(f.size() == 16);
  CHECK(f.dim() == 6);
  CHECK(f.is_real());
  const double s = 1.0 / std::sqrt(3.0);
  for (Eigen::Index i = 0; i < 6; ++i)
    for (Eigen::Index j = 0; j < 16; ++j) {
      const double e = std::abs(f.synthesis()(i, j));
      CHECK((e == 0.0 || std::abs(e - s) < 1e-15));
    }
  auto rep = verify_frame(f);
  CHECK(rep.is_etf);
  CHECK(rep.coherence == doctest::Approx(1.0 / 3).epsilon(1e-12));

  const Frame c = steiner_etf(sys, dft(4));
  CHECK_FALSE(c.is_real());
  auto rc = verify_frame(c);
  CHECK(rc.is_etf);
  CHECK(rc.n == 16);
  CHECK(rc.r == 6);
  CHECK(rc.coherence == doctest::Approx(1.0 / 3).epsilon(1e-12));
}

TEST_CASE("fano steiner ETF saturates the real gerzon limit") {
  const Frame f = steiner_etf(projective_plane(2), sylvester(2));
  CHECK(f.size() == 28);
  CHECK(f.dim() == 7);
  auto rep = verify_frame(f);
  CHECK(rep.is_etf);
  CHECK(rep.gerzon_limit_real == 28);
}

TEST_CASE("steiner ETF structure on every plane") {
  for (const auto& [name, f] : constructed_etfs()) {
    if (name.rfind("simplex", 0) == 0) continue;
    CAPTURE(name);
    const bool affine = name.rfind("affine", 0) == 0;
    const auto q = static_cast<std::uint32_t>(name[affine ? 7 : 11] - '0');
    const auto sys = affine ? affine_plane(q) : projective_plane(q);
    const double rho = double(sys.rho());
    CHECK(f.size() == Eigen::Index(sys.v() * (1 + sys.rho())));
    CHECK(f.dim() == Eigen::Index(sys.b()));
    for (Eigen::Index i = 0; i < f.dim(); ++i) {
      int nonzero = 0;
      for (Eigen::Index j = 0; j < f.size(); ++j) {
        const double e = std::abs(f.synthesis()(i, j));
        if (e > 1e-12) {
          ++nonzero;
          CHECK(std::abs(e - 1.0 / std::sqrt(rho)) < 1e-12);
        }
      }
      CHECK(nonzero == int(sys.k() * (1 + sys.rho())));
    }
    CHECK(max_offdiag_abs_dev(gram(f).x, 1.0 / rho) < 1e-9);
  }
}

TEST_CASE("steiner ETF input validation") {
  const auto sys = affine_plane(2);
  CHECK(code_of([&] { steiner_etf(sys, sylvester(1)); }) == ErrorCode::SizeMismatch);
  CHECK(code_of([&] { steiner_etf(sys, CMatrix::Ones(4, 4)); }) == ErrorCode::NotHadamard);
  std::vector<Block> blocks = sys.blocks();
  blocks.pop_back();
  CHECK(code_of([&] { steiner_etf(SteinerSystem(4, 2, blocks), sylvester(2)); }) ==
        ErrorCode::InvalidDesign);
}

TEST_CASE("randomized hadamard row assignment still gives an ETF") {
  std::mt19937_64 rng(11);
  for (bool affine : {true, false}) {
    const auto sys = affine ? affine_plane(3) : projective_plane(2);
    const std::size_t order = sys.rho() + 1;
    const CMatrix h = dft(static_cast<int>(order));
    for (int trial = 0; trial < 5; ++trial) {
      SteinerRowAssignment rows(sys.v());
      for (auto& r : rows) {
        std::vector<std::size_t> perm(order);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        r.assign(perm.begin(), perm.begin() + sys.rho());
      }
      const Frame f = steiner_etf(sys, h, rows);
      auto rep = verify_frame(f);
      CHECK(rep.is_etf);
      CHECK(rep.coherence == doctest::Approx(1.0 / double(sys.rho())).epsilon(1e-10));
    }
  }
}

TEST_CASE("welch equality and gerzon on every constructed ETF") {
  for (const auto& [name, f] : constructed_etfs()) {
    CAPTURE(name);
    auto rep = verify_frame(f);
    CHECK(rep.is_etf);
    CHECK(rep.welch_equality);
    CHECK(std::abs(rep.coherence - welch_bound(f.size(), f.dim())) < 1e-9);
    // coherence 1 (antipodal pair) is outside the Gerzon argument
    if (rep.coherence < 1 - 1e-9) CHECK(f.size() <= gerzon_limit(f.is_real(), f.dim()));
  }
}

TEST_CASE("naimark complements") {
  const Frame c3 = naimark_complement(simplex_etf(3));
  CHECK(c3.dim() == 1);
  CHECK(c3.size() == 4);
  CHECK((gram(c3).x.cwiseAbs() - RMatrix::Ones(4, 4)).cwiseAbs().maxCoeff() < 1e-12);

  const Frame ca = naimark_complement(steiner("affine", 2, true));
  CHECK(ca.dim() == 10);
  auto rep = verify_frame(ca);
  CHECK(rep.is_etf);
  CHECK(rep.coherence == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(std::abs(welch_bound(16, 10) - 0.2) < 1e-15);

  CHECK(code_of([] { naimark_complement(orthonormal_basis(3)); }) == ErrorCode::FullRank);
  std::mt19937_64 rng(3);
  const Frame loose = Frame::from_synthesis(random_unit_columns(rng, 2, 5, false));
  CHECK(code_of([&] { naimark_complement(loose); }) == ErrorCode::NotUntf);
}

TEST_CASE("naimark gram identity on constructed and random UNTFs") {
  std::vector<Frame> frames;
  for (const auto& nf : constructed_etfs())
    if (nf.frame.dim() < nf.frame.size()) frames.push_back(nf.frame);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    std::uniform_int_distribution<int> rd(1, 5);
    const int r = rd(rng);
    std::uniform_int_distribution<int> nd(r + 1, r + 6);
    frames.push_back(random_untf(rng, r, nd(rng), t % 2 == 0));
  }
  for (const auto& f : frames) {
    const Frame c = naimark_complement(f);
    const double n = double(f.size());
    const double r = double(f.dim());
    const CMatrix lhs = (n - r) * gram(c).x + r * gram(f).x;
    const CMatrix rhs = n * CMatrix::Identity(f.size(), f.size());
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-8);
    CHECK(c.is_real() == f.is_real());
  }
}

TEST_CASE("UNTF residuals agree") {
  std::mt19937_64 rng(2026);
  int untf_count = 0;
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<int> rd(1, 5);
    const int r = rd(rng);
    std::uniform_int_distribution<int> nd(r, r + 6);
    const int n = nd(rng);
    const bool complex = t % 3 == 0;
    const Frame f = t % 2 == 0 ? random_untf(rng, r, n, complex)
                               : Frame::from_synthesis(random_unit_columns(rng, r, n, complex));
    auto rep = verify_frame(f);
    const double limit = 1e-7 * n;
    const bool a = rep.untf_residuals[0] < limit;
    const bool b = rep.untf_residuals[1] < limit;
    const bool c = rep.untf_residuals[2] < limit;
    CHECK(a == b);
    CHECK(b == c);
    CHECK(rep.is_untf == a);
    untf_count += rep.is_untf;
  }
  CHECK(untf_count >= 100);
}
