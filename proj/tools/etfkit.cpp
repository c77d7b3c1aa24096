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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "etfkit/errors.hpp"
#include "etfkit/io.hpp"

using namespace etfkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::uint64_t seed = 0;
  std::optional<double> tol;

  std::string plane = "affine";
  std::uint32_t q = 2;
  std::string hadamard = "dft";
  int simplex_r = 1;
  std::string in;
  std::string out;
  std::string y;
  std::string frame;
  bool exact = false;
  std::optional<long long> cap;
  std::vector<long long> table_q{2, 3, 5, 11};
};

void emit(const Json& doc) { std::cout << dump_json(doc) << std::flush; }

// Writes `content` to `path` when given, otherwise returns false.
bool maybe_write(const std::string& path, const std::string& content) {
  if (path.empty()) return false;
  write_file_atomic(path, content);
  return true;
}

int finish_construct(const Frame& f, const std::string& recipe, const Options& opt) {
  Json doc = frame_to_json(f);
  if (maybe_write(opt.out, dump_json(doc))) {
    Json summary;
    summary["kind"] = "construct";
    summary["recipe"] = recipe;
    summary["n"] = f.size();
    summary["r"] = f.dim();
    summary["real"] = f.is_real();
    summary["out"] = opt.out;
    emit(summary);
  } else {
    emit(doc);
  }
  std::cerr << recipe << ": " << f.size() << " vectors in dimension " << f.dim() << "\n";
  return kExitOk;
}

int run_steiner(const Options& opt) {
  const SteinerSystem sys = opt.plane == "affine" ? affine_plane(opt.q) : projective_plane(opt.q);
  const auto order = static_cast<std::int64_t>(sys.rho() + 1);
  CMatrix h;
  std::string recipe;
  if (opt.hadamard == "real") {
    auto rh = real_hadamard(order);
    if (!rh)
      throw Error(ErrorCode::NotHadamard,
                  "no real Hadamard matrix of order " + std::to_string(order) + " is available");
    h = rh->matrix();
    recipe = rh->recipe;
  } else {
    h = dft(static_cast<int>(order));
    recipe = "dft(" + std::to_string(order) + ")";
  }
  return finish_construct(steiner_etf(sys, h),
                          "steiner(" + opt.plane + " " + std::to_string(opt.q) + ", " + recipe + ")",
                          opt);
}

Frame load_frame(const std::string& path) { return frame_from_json(read_json_file(path)); }

int run_verify(const Options& opt) {
  const FrameReport rep = verify_frame(load_frame(opt.in));
  const bool passed = rep.is_untf && rep.is_etf == rep.welch_equality;
  Json doc = to_json(rep);
  doc["passed"] = passed;
  emit(doc);
  std::cerr << (rep.is_etf ? "ETF" : rep.is_untf ? "UNTF (not equiangular)" : "not a UNTF")
            << ", coherence " << rep.coherence << " vs Welch " << rep.welch << "\n";
  return passed ? kExitOk : kExitFailed;
}

int run_pert_check(const Options& opt) {
  const Frame f = load_frame(opt.in);
  const OverlapReport overlap = overlap_inequality_check(f);
  Json doc;
  doc["n"] = f.size();
  doc["r"] = f.dim();
  doc["overlap"] = to_json(overlap);
  bool passed = overlap.passed;
  if (verify_frame(f).is_etf) {
    const GapMatrix gap = etf_gap(f);
    doc["gap"] = to_json(gap);
    doc["kernel_dim"] = gap.kernel_dim;
    passed = passed && gap.passed;
  } else {
    doc["gap"] = nullptr;
    doc["kernel_dim"] = nullptr;
  }
  doc["passed"] = passed;
  emit(doc);
  std::cerr << "overlap min eigenvalues " << overlap.min_eig_identity_form << " / "
            << overlap.min_eig_gram_form << (passed ? ", all checks hold\n" : ", check failed\n");
  return passed ? kExitOk : kExitFailed;
}

RMatrix real_gram(const Frame& f) { return gram(f).x.real(); }

int run_witness(const Options& opt) {
  const Frame f = load_frame(opt.in);
  const RMatrix y = sos_witness(f);
  const E4Report rep = verify_e4_membership(y, real_gram(f));
  maybe_write(opt.out, dump_json(matrix_to_json(y)));
  Json doc;
  doc["n"] = f.size();
  doc["r"] = f.dim();
  doc["scale"] = sos_witness_scale(f.size(), f.dim());
  doc["y_dim"] = y.rows();
  doc["out"] = opt.out.empty() ? Json(nullptr) : Json(opt.out);
  doc["e4"] = to_json(rep);
  doc["passed"] = rep.passed;
  emit(doc);
  std::cerr << "witness of size " << y.rows() << (rep.passed ? " certifies" : " fails to certify")
            << " the Gram matrix\n";
  return rep.passed ? kExitOk : kExitFailed;
}

int run_witness_verify(const Options& opt) {
  const CMatrix yc = matrix_from_json(read_json_file(opt.y));
  if (!is_exactly_real(yc)) throw Error(ErrorCode::ComplexFrame, "witness must be real");
  const Frame f = load_frame(opt.frame);
  if (!f.is_real()) throw Error(ErrorCode::ComplexFrame, "frame must be real");
  const E4Report rep = verify_e4_membership(yc.real(), real_gram(f));
  Json doc = to_json(rep);
  emit(doc);
  std::cerr << (rep.passed ? "all four moment conditions hold\n" : "moment conditions fail\n");
  return rep.passed ? kExitOk : kExitFailed;
}

int run_spark(const Options& opt) {
  const Frame f = load_frame(opt.in);
  std::optional<Eigen::Index> cap;
  if (opt.cap) cap = static_cast<Eigen::Index>(*opt.cap);
  const BoundReport rep = bound_report(f, opt.exact, cap);
  emit(to_json(rep));
  if (rep.spark_exact) std::cerr << "spark = " << *rep.spark_exact << "\n";
  return rep.all_valid() ? kExitOk : kExitFailed;
}

int run_table1(const Options& opt) {
  std::vector<FamilyRow> rows;
  for (long long q : opt.table_q) {
    auto part = table1(q);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  const std::string csv = table1_csv(rows);
  if (maybe_write(opt.out, csv)) {
    Json doc;
    doc["out"] = opt.out;
    doc["rows"] = Json::array();
    for (const auto& row : rows) doc["rows"].push_back(to_json(row));
    emit(doc);
  } else {
    std::cout << csv << std::flush;
  }
  std::cerr << rows.size() << " table rows\n";
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::GerzonSaturated:
    case ErrorCode::GerzonViolation:
    case ErrorCode::NotEtf:
    case ErrorCode::NotUntf:
    case ErrorCode::SingularX2:
      return kExitFailed;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Equiangular tight frames: construction, verification and spark bounds"};
  app.require_subcommand(1);
  app.add_option("--seed", opt.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--tol", opt.tol, "Entrywise tolerance (default 1e-9 or $ETFKIT_TOL)")
      ->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "Build a frame");
  construct->require_subcommand(1);
  auto* steiner = construct->add_subcommand("steiner", "Steiner ETF from a finite plane");
  steiner->add_option("--plane", opt.plane)->check(CLI::IsMember({"affine", "projective"}))
      ->capture_default_str();
  steiner->add_option("--q", opt.q, "Plane order (prime power)")->required();
  steiner->add_option("--hadamard", opt.hadamard)->check(CLI::IsMember({"real", "dft"}))
      ->capture_default_str();
  steiner->add_option("--out", opt.out, "Frame JSON destination");
  auto* simplex = construct->add_subcommand("simplex", "Regular simplex ETF");
  simplex->add_option("--r", opt.simplex_r)->required()->check(CLI::PositiveNumber);
  simplex->add_option("--out", opt.out);
  auto* naimark = construct->add_subcommand("naimark", "Naimark complement of a UNTF");
  naimark->add_option("--in", opt.in)->required();
  naimark->add_option("--out", opt.out);

  auto* verify = app.add_subcommand("verify", "Tightness, equiangularity and Welch equality");
  verify->add_option("--in", opt.in)->required();

  auto* pert = app.add_subcommand("pert", "Perturbation-subspace inequalities");
  pert->require_subcommand(1);
  auto* pert_check = pert->add_subcommand("check", "Overlap inequality and ETF gap spectrum");
  pert_check->add_option("--in", opt.in)->required();

  auto* witness = app.add_subcommand("witness", "Degree-4 moment witness for a real ETF");
  witness->add_option("--in", opt.in);
  witness->add_option("--out", opt.out);
  auto* witness_verify = witness->add_subcommand("verify", "Check a witness against a frame");
  witness_verify->add_option("--y", opt.y)->required();
  witness_verify->add_option("--frame", opt.frame)->required();

  auto* spark = app.add_subcommand("spark", "Spark lower bounds and exact enumeration");
  spark->add_option("--in", opt.in)->required();
  spark->add_flag("--exact", opt.exact, "Enumerate spark and cospark");
  spark->add_option("--cap", opt.cap, "Largest subset size tried")->check(CLI::PositiveNumber);

  auto* t1 = app.add_subcommand("table1", "Spark bounds for the four ETF families");
  t1->add_option("--q", opt.table_q, "Comma-separated field sizes")->delimiter(',')
      ->capture_default_str();
  t1->add_option("--out", opt.out, "CSV destination (stdout if omitted)");

  try {
    app.parse(argc, argv);
    if (witness->parsed() && !witness_verify->parsed() && opt.in.empty())
      throw CLI::RequiredError("--in");
    if (const char* env = std::getenv("ETFKIT_TOL"); env && !opt.tol) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end == env || *end != '\0' || !(v > 0.0))
        throw CLI::ValidationError("ETFKIT_TOL", "expected a positive number, got '" +
                                                     std::string(env) + "'");
    }
  } catch (const CLI::CallForHelp& e) {
    std::cerr << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (opt.tol) set_entrywise_tolerance(*opt.tol);
    if (steiner->parsed()) return run_steiner(opt);
    if (simplex->parsed())
      return finish_construct(simplex_etf(opt.simplex_r),
                              "simplex(" + std::to_string(opt.simplex_r) + ")", opt);
    if (naimark->parsed()) return finish_construct(naimark_complement(load_frame(opt.in)),
                                                   "naimark(" + opt.in + ")", opt);
    if (verify->parsed()) return run_verify(opt);
    if (pert_check->parsed()) return run_pert_check(opt);
    if (witness_verify->parsed()) return run_witness_verify(opt);
    if (witness->parsed()) return run_witness(opt);
    if (spark->parsed()) return run_spark(opt);
    if (t1->parsed()) return run_table1(opt);
  } catch (const Error& e) {
    Json doc;
    doc["error"] = std::string(to_string(e.code()));
    doc["message"] = e.what();
    emit(doc);
    std::cerr << "etfkit: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "etfkit: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
