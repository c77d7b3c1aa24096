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

#include "etfkit/designs.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "etfkit/errors.hpp"
#include "etfkit/finite_field.hpp"

namespace etfkit {

namespace {

void check_plane_order(std::uint32_t q) {
  if (q < 2 || q > kMaxPlaneOrder)
    throw Error(ErrorCode::DomainError,
                "plane order " + std::to_string(q) + " outside [2, " +
                    std::to_string(kMaxPlaneOrder) + "]");
}

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t v) {
  // strict upper triangle, row-major
  return i * v - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

SteinerSystem::SteinerSystem(std::size_t v, std::size_t k,
                             std::vector<Block> blocks)
    : v_(v), k_(k), blocks_(std::move(blocks)) {
  if (k_ < 2 || k_ > v_)
    throw Error(ErrorCode::InvalidDesign,
                "need 2 <= k <= v, got k=" + std::to_string(k_) +
                    " v=" + std::to_string(v_));
  for (auto& blk : blocks_) {
    std::sort(blk.begin(), blk.end());
    if (std::adjacent_find(blk.begin(), blk.end()) != blk.end())
      throw Error(ErrorCode::InvalidDesign, "block repeats a point");
    if (!blk.empty() && blk.back() >= v_)
      throw Error(ErrorCode::InvalidDesign,
                  "point " + std::to_string(blk.back()) + " out of range");
  }
  std::sort(blocks_.begin(), blocks_.end());
}

std::vector<std::size_t> SteinerSystem::blocks_through(std::size_t point) const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (std::binary_search(blocks_[b].begin(), blocks_[b].end(), point))
      out.push_back(b);
  return out;
}

SteinerSystem affine_plane(std::uint32_t q) {
  check_plane_order(q);
  const FiniteField field(q);
  auto idx = [q](std::uint32_t x, std::uint32_t y) {
    return std::size_t(x) * q + y;
  };
  std::vector<Block> blocks;
  blocks.reserve(std::size_t(q) * q + q);
  // x = c
  for (std::uint32_t c = 0; c < q; ++c) {
    Block blk;
    for (std::uint32_t y = 0; y < q; ++y) blk.push_back(idx(c, y));
    blocks.push_back(std::move(blk));
  }
  // y = s*x + c
  for (std::uint32_t s = 0; s < q; ++s) {
    for (std::uint32_t c = 0; c < q; ++c) {
      Block blk;
      for (std::uint32_t x = 0; x < q; ++x)
        blk.push_back(idx(x, field.add(field.mul(s, x), c)));
      blocks.push_back(std::move(blk));
    }
  }
  return SteinerSystem(std::size_t(q) * q, q, std::move(blocks));
}

SteinerSystem projective_plane(std::uint32_t q) {
  check_plane_order(q);
  const FiniteField field(q);
  using Vec3 = std::array<std::uint32_t, 3>;
  // Lexicographic enumeration of normalized representatives.
  std::vector<Vec3> points;
  for (std::uint32_t b = 0; b < q; ++b)
    for (std::uint32_t c = 0; c < q; ++c) points.push_back({1, b, c});
  for (std::uint32_t c = 0; c < q; ++c) points.push_back({0, 1, c});
  points.push_back({0, 0, 1});
  std::sort(points.begin(), points.end());

  // Each 2-dim subspace is the kernel of a normalized linear form.
  std::vector<Block> blocks;
  blocks.reserve(points.size());
  for (const auto& form : points) {
    Block blk;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto& pt = points[i];
      auto dot = field.add(field.add(field.mul(form[0], pt[0]),
                                     field.mul(form[1], pt[1])),
                           field.mul(form[2], pt[2]));
      if (dot == 0) blk.push_back(i);
    }
    blocks.push_back(std::move(blk));
  }
  return SteinerSystem(points.size(), q + 1, std::move(blocks));
}

std::size_t SteinerReport::count(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return pair_counts.at(pair_index(i, j, v));
}

SteinerReport verify_steiner(const SteinerSystem& sys) {
  SteinerReport rep;
  const std::size_t v = sys.v();
  rep.v = v;
  rep.pair_counts.assign(v * (v - 1) / 2, 0);
  for (std::size_t b = 0; b < sys.b(); ++b) {
    const auto& blk = sys.blocks()[b];
    if (blk.size() != sys.k()) rep.wrong_size_blocks.push_back(b);
    for (std::size_t x = 0; x < blk.size(); ++x)
      for (std::size_t y = x + 1; y < blk.size(); ++y)
        ++rep.pair_counts[pair_index(blk[x], blk[y], v)];
  }
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      const auto c = rep.pair_counts[pair_index(i, j, v)];
      if (c == 0) rep.uncovered.emplace_back(i, j);
      if (c > 1) rep.overcovered.emplace_back(i, j);
    }
  }
  rep.passed = rep.uncovered.empty() && rep.overcovered.empty() &&
               rep.wrong_size_blocks.empty();
  return rep;
}

IntMatrix incidence_matrix(const SteinerSystem& sys) {
  IntMatrix n = IntMatrix::Zero(sys.v(), sys.b());
  for (std::size_t b = 0; b < sys.b(); ++b)
    for (auto p : sys.blocks()[b]) n(p, b) = 1;
  return n;
}

Graph::Graph(IntMatrix adjacency) : adj_(std::move(adjacency)) {
  if (adj_.rows() != adj_.cols())
    throw Error(ErrorCode::InvalidDesign, "adjacency matrix not square");
  for (Eigen::Index i = 0; i < adj_.rows(); ++i) {
    if (adj_(i, i) != 0)
      throw Error(ErrorCode::InvalidDesign, "adjacency has a loop");
    for (Eigen::Index j = 0; j < adj_.cols(); ++j) {
      if (adj_(i, j) != adj_(j, i) || (adj_(i, j) != 0 && adj_(i, j) != 1))
        throw Error(ErrorCode::InvalidDesign,
                    "adjacency not symmetric 0/1 at (" + std::to_string(i) +
                        "," + std::to_string(j) + ")");
    }
  }
}

Graph block_intersection_graph(const SteinerSystem& sys) {
  const std::size_t b = sys.b();
  IntMatrix adj = IntMatrix::Zero(b, b);
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = i + 1; j < b; ++j) {
      const auto& x = sys.blocks()[i];
      const auto& y = sys.blocks()[j];
      std::vector<std::size_t> common;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                            std::back_inserter(common));
      if (!common.empty()) adj(i, j) = adj(j, i) = 1;
    }
  }
  return Graph(std::move(adj));
}

SrgParameters verify_srg(const Graph& g) {
  const std::size_t n = g.size();
  if (n == 0) throw Error(ErrorCode::DomainError, "empty graph");
  const IntMatrix& a = g.adjacency();

  SrgParameters out;
  out.v = n;
  out.k = static_cast<std::size_t>(a.row(0).sum());
  for (std::size_t i = 1; i < n; ++i) {
    if (static_cast<std::size_t>(a.row(i).sum()) != out.k)
      throw Error(ErrorCode::NotRegular,
                  "vertex " + std::to_string(i) + " has degree " +
                      std::to_string(a.row(i).sum()) + ", vertex 0 has " +
                      std::to_string(out.k));
  }

  const IntMatrix common = a * a;
  std::optional<std::size_t> lambda, mu;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto c = static_cast<std::size_t>(common(i, j));
      auto& slot = g.adjacent(i, j) ? lambda : mu;
      if (!slot) {
        slot = c;
      } else if (*slot != c) {
        throw Error(ErrorCode::NotStronglyRegular,
                    "pair (" + std::to_string(i) + "," + std::to_string(j) +
                        ") has " + std::to_string(c) + " common neighbours, expected " +
                        std::to_string(*slot));
      }
    }
  }
  out.lambda_defined = lambda.has_value();
  out.mu_defined = mu.has_value();
  out.lambda = lambda.value_or(0);
  out.mu = mu.value_or(0);
  return out;
}

std::string to_csv(const IntMatrix& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace etfkit
