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

// Runs the ten acceptance criteria and prints one PASS/FAIL line each.

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "etfkit/errors.hpp"
#include "etfkit/exact_rank.hpp"
#include "etfkit/pert.hpp"
#include "etfkit/sparsity.hpp"
#include "support/random_frames.hpp"

using namespace etfkit;
using namespace etfkit::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
};

std::vector<NamedFrame> etf_corpus() {
  std::vector<NamedFrame> out;
  for (int r = 1; r <= 6; ++r) out.push_back({"simplex " + std::to_string(r), simplex_etf(r)});
  out.push_back({"affine 2 real", steiner("affine", 2, true)});
  out.push_back({"affine 2 dft", steiner("affine", 2, false)});
  out.push_back({"affine 3 dft", steiner("affine", 3, false)});
  out.push_back({"projective 2 real", steiner("projective", 2, true)});
  out.push_back({"projective 2 dft", steiner("projective", 2, false)});
  out.push_back({"projective 3 dft", steiner("projective", 3, false)});
  return out;
}

void welch_equality(Outcome& o) {
  for (const auto& [name, f] : etf_corpus()) {
    const double coh = gram(f).coherence;
    o.require(std::abs(coh - welch_bound(f.size(), f.dim())) < 1e-9, name);
  }
}

void oracle_equivalence(Outcome& o) {
  const NamedFrame frames[] = {{"simplex 2", simplex_etf(2)},
                               {"simplex 3", simplex_etf(3)},
                               {"affine 2 sylvester", steiner("affine", 2, true)}};
  for (const auto& [name, f] : frames) {
    const RMatrix dense = pert_projector_dense(f).dense();
    const RMatrix oracle = pert_oracle(f);
    o.require((dense - oracle).cwiseAbs().maxCoeff() < 1e-6, name);
    if (name == "affine 2 sylvester") o.require(dense.rows() == 256, "dense size 256");
  }
}

void overlap_inequality(Outcome& o) {
  auto gram_form = [](const Frame& f) {
    const RMatrix w = abs_squared(f.synthesis());
    const RMatrix m = abs_squared(gram(f).x) - w.transpose() * w;
    return symmetric_eigenvalues(m).minCoeff();
  };
  for (const auto& [name, f] : etf_corpus()) o.require(gram_form(f) >= -1e-8, name);
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<int> nd(2, 12);
  for (int t = 0; t < 50; ++t) {
    const int n = nd(rng);
    std::uniform_int_distribution<int> rd(1, n - 1);
    const Frame f = random_untf(rng, rd(rng), n, t % 2 == 1);
    o.require(verify_frame(f).is_untf, "random frame " + std::to_string(t) + " not tight");
    o.require(gram_form(f) >= -1e-8, "random frame " + std::to_string(t));
  }
}

void gap_structure(Outcome& o) {
  for (const auto& [name, f] : etf_corpus()) o.require(etf_gap(f).min_eig >= -1e-8, name);
  const GapMatrix aff = etf_gap(steiner("affine", 2, true));
  o.require(aff.kernel_dim == 4, "affine kernel_dim");
  Eigen::Index eights = 0;
  for (Eigen::Index i = 0; i < aff.eigenvalues.size(); ++i) {
    const double e = aff.eigenvalues(i);
    if (std::abs(e - 8.0 / 9) < 1e-7) ++eights;
    else o.require(std::abs(e) < 1e-7, "affine eigenvalue outside {0, 8/9}");
  }
  o.require(eights == 2, "affine 8/9 multiplicity");
  o.require(etf_gap(steiner("projective", 2, true)).gap.cwiseAbs().maxCoeff() < 1e-9,
            "fano gap nonzero");
}

void sos_witness_check(Outcome& o) {
  const NamedFrame frames[] = {{"simplex 3", simplex_etf(3)},
                               {"simplex 4", simplex_etf(4)},
                               {"affine 2 sylvester", steiner("affine", 2, true)}};
  for (const auto& [name, f] : frames) {
    const auto rep = verify_e4_membership(sos_witness(f), gram(f).x.real());
    o.require(rep.even_entries_ok && rep.odd_groups_ok && rep.gram_corner_ok && rep.psd_ok,
              name);
  }
  bool saturated = false;
  try {
    sos_witness(steiner("projective", 2, true));
  } catch (const Error& e) {
    saturated = e.code() == ErrorCode::GerzonSaturated;
  }
  o.require(saturated, "fano not rejected with GerzonSaturated");
}

void table_reproduction(Outcome& o) {
  const auto q11 = table1(11);
  for (const auto& row : q11) {
    const std::string fam = to_string(row.family);
    o.require(row.gershgorin_match(), fam + " gershgorin");
    o.require(row.nerf_match(), fam + " nerf");
    o.require(row.ours_match(), fam + " ours");
    o.require(std::abs(row.gershgorin - double(row.table_gershgorin)) < 1e-9,
              fam + " gershgorin exact");
    if (row.family != Table1Family::Hyperovals)
      o.require(std::abs(row.ours - double(row.table_ours)) < 1e-9, fam + " ours exact");
  }
  const auto q2 = table1(2);
  o.require(std::abs(q2[0].gershgorin - 6) < 1e-9 && std::abs(q2[0].ours - 6) < 1e-9,
            "affine q=2 (6, 6)");
  o.require(std::abs(q2[1].gershgorin - 10) < 1e-9 && std::abs(q2[1].ours - 12) < 1e-9,
            "projective q=2 (10, 12)");
}

void spark_duality(Outcome& o) {
  const auto s3 = bound_report(simplex_etf(3), true);
  o.require(s3.spark_exact && *s3.spark_exact == 4, "spark(simplex 3) = 4");
  for (const auto& b : {s3.gershgorin, s3.nerf, s3.corollary_spark})
    o.require(b && std::abs(*b - 4) < 1e-9, "bound at 4");
  std::vector<NamedFrame> frames;
  for (int r = 1; r <= 3; ++r) frames.push_back({"simplex " + std::to_string(r), simplex_etf(r)});
  frames.push_back({"affine 2 sylvester", steiner("affine", 2, true)});
  for (const auto& [name, f] : frames) {
    const auto co = cospark_exact(f, RankMethod::Exact);
    const Frame comp = naimark_complement(f);
    const auto sp = spark_exact(comp, comp.size(), RankMethod::Exact);
    o.require(sp.spark && co.cospark == *sp.spark, name);
  }
  const auto kernel_route = complement_spark_exact(steiner("affine", 2, true), 16);
  o.require(kernel_route.spark &&
                *kernel_route.spark == cospark_exact(steiner("affine", 2, true)).cospark,
            "kernel-basis complement spark");
}

void corollary_dominance(Outcome& o) {
  long long violations = 0;
  for (long long n = 3; n <= 200; ++n)
    for (long long r = 2; r < n; ++r)
      if (corollary_bounds(n, r).spark_lb < nerf_bound(n, r)) ++violations;
  o.require(violations == 0, std::to_string(violations) + " grid violations");
  o.require(crossover_difference(10000, 0.6) > 0, "beta 0.6 sign");
  o.require(crossover_difference(10000, 0.75) < 0, "beta 0.75 sign");
}

void overlap_corollary(Outcome& o) {
  auto all_pairs = [&](const std::string& name, const Frame& f, bool tight) {
    for (Eigen::Index a = 0; a < f.dim(); ++a)
      for (Eigen::Index b = a + 1; b < f.dim(); ++b) {
        const auto rep = overlap_deviation_check(f, a, b);
        if (tight)
          o.require(std::abs(rep.lhs) < 1e-9 && std::abs(rep.rhs) < 1e-9, name + " tightness");
        o.require(rep.passed, name);
      }
  };
  all_pairs("fano", steiner("projective", 2, true), true);
  all_pairs("affine 2", steiner("affine", 2, true), false);
  all_pairs("affine 3", steiner("affine", 3, false), false);
  for (int r = 2; r <= 6; ++r) all_pairs("simplex " + std::to_string(r), simplex_etf(r), false);
}

void combinatorial_layer(Outcome& o) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    for (bool affine : {true, false}) {
      const auto sys = affine ? affine_plane(q) : projective_plane(q);
      const std::string name = (affine ? "affine " : "projective ") + std::to_string(q);
      o.require(verify_steiner(sys).passed, name);
      const IntMatrix n = incidence_matrix(sys);
      const IntMatrix rhs = IntMatrix::Identity(sys.b(), sys.b()) * std::int64_t(sys.k()) +
                            block_intersection_graph(sys).adjacency();
      o.require(IntMatrix(n.transpose() * n) == rhs, name + " NtN");
    }
  }
  const auto srg = verify_srg(block_intersection_graph(affine_plane(2)));
  o.require(srg.v == 6 && srg.k == 4 && srg.lambda == 2 && srg.mu == 4, "srg(6,4,2,4)");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"welch equality on constructed ETFs", welch_equality},
      {"dense projector matches constraint-space oracle", oracle_equivalence},
      {"overlap inequality on ETFs and 50 random UNTFs", overlap_inequality},
      {"ETF gap PSD with Steiner kernel structure", gap_structure},
      {"degree-4 witness membership and Gerzon rejection", sos_witness_check},
      {"spark bound table at q = 11 and q = 2", table_reproduction},
      {"exact spark and Naimark duality", spark_duality},
      {"corollary dominance and crossover", corollary_dominance},
      {"overlap corollary tightness and slack", overlap_corollary},
      {"planes, incidence identity and SRG parameters", combinatorial_layer},
  };
  int failures = 0;
  int idx = 0;
  for (const auto& [label, run] : criteria) {
    ++idx;
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes << " [exception: " << e.what() << "]";
    }
    std::printf("%s %2d  %s%s\n", o.ok ? "PASS" : "FAIL", idx, label, o.notes.str().c_str());
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
