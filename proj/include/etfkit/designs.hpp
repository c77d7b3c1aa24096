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

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etfkit/linalg.hpp"

namespace etfkit {

using Block = std::vector<std::size_t>;

/// A (2, k, v)-Steiner system candidate. Blocks are stored sorted and in
/// lexicographic order; the t = 2 property itself is checked by
/// verify_steiner, not enforced by the constructor.
class SteinerSystem {
 public:
  /// Throws Error(InvalidDesign) for k < 2, k > v, repeated points inside a
  /// block, or points outside 0..v-1. Block sizes are checked by
  /// verify_steiner.
  SteinerSystem(std::size_t v, std::size_t k, std::vector<Block> blocks);

  std::size_t v() const { return v_; }
  std::size_t k() const { return k_; }
  std::size_t b() const { return blocks_.size(); }
  /// Replication number (v-1)/(k-1), as a real design must have.
  std::size_t rho() const { return (v_ - 1) / (k_ - 1); }
  const std::vector<Block>& blocks() const { return blocks_; }

  /// Indices of the blocks containing `point`, ascending.
  std::vector<std::size_t> blocks_through(std::size_t point) const;

 private:
  std::size_t v_;
  std::size_t k_;
  std::vector<Block> blocks_;
};

/// Lines of GF(q)^2. Point (x, y) has index x*q + y.
SteinerSystem affine_plane(std::uint32_t q);

/// Projective plane over GF(q): points are normalized vectors of GF(q)^3
/// (first nonzero coordinate 1) in lexicographic order; blocks are the
/// 2-dimensional subspaces.
SteinerSystem projective_plane(std::uint32_t q);

/// Largest plane order the constructors accept.
inline constexpr std::uint32_t kMaxPlaneOrder = 256;

struct SteinerReport {
  bool passed = false;
  std::size_t v = 0;
  /// Covering-block count per pair i < j (strict upper triangle, row-major);
  /// use count() for lookup.
  std::vector<std::size_t> pair_counts;
  std::vector<std::pair<std::size_t, std::size_t>> uncovered;
  std::vector<std::pair<std::size_t, std::size_t>> overcovered;
  std::vector<std::size_t> wrong_size_blocks;

  std::size_t count(std::size_t i, std::size_t j) const;
};

SteinerReport verify_steiner(const SteinerSystem& sys);

/// v x b 0/1 incidence matrix; column order follows sys.blocks().
IntMatrix incidence_matrix(const SteinerSystem& sys);

/// Simple undirected graph as a symmetric 0/1 adjacency matrix.
class Graph {
 public:
  /// Throws Error(InvalidDesign) if not symmetric 0/1 with zero diagonal.
  explicit Graph(IntMatrix adjacency);

  std::size_t size() const { return static_cast<std::size_t>(adj_.rows()); }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_(i, j) != 0; }
  const IntMatrix& adjacency() const { return adj_; }

 private:
  IntMatrix adj_;
};

/// Blocks are adjacent iff they share a point.
Graph block_intersection_graph(const SteinerSystem& sys);

struct SrgParameters {
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::size_t mu = 0;
  /// False when the graph has no adjacent (resp. non-adjacent) distinct
  /// pairs; the corresponding parameter is then reported as 0.
  bool lambda_defined = true;
  bool mu_defined = true;
};

/// Throws Error(NotRegular) or Error(NotStronglyRegular) naming the first
/// offending vertex or pair.
SrgParameters verify_srg(const Graph& g);

std::string to_csv(const IntMatrix& m);

}  // namespace etfkit
