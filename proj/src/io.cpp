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

#include "etfkit/io.hpp"

#include <unistd.h>

#include <charconv>
#include <fstream>
#include <sstream>

#include "etfkit/errors.hpp"

namespace etfkit {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  const std::size_t end = std::min(byte, text.size());
  for (std::size_t i = 0; i + 1 < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object()) parse_fail("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) parse_fail(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t require_count(const Json& doc, const char* key) {
  const Json& val = require(doc, key);
  if (!val.is_number_unsigned())
    parse_fail(std::string("field \"") + key + "\" must be a non-negative integer");
  return val.get<std::size_t>();
}

std::string shortest(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::string what = e.what();
    if (auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
    parse_fail("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
               what);
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + std::string(e.what()).substr(
                                                              std::string("ParseError: ").size()));
  }
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  const auto tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error(ErrorCode::IoError, "short write to " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot rename onto " + path.string());
  }
}

Json matrix_to_json(const CMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      data.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
  Json doc;
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  doc["data"] = std::move(data);
  return doc;
}

Json matrix_to_json(const RMatrix& m) { return matrix_to_json(CMatrix(m.cast<Complex>())); }

CMatrix matrix_from_json(const Json& doc) {
  const std::size_t rows = require_count(doc, "rows");
  const std::size_t cols = require_count(doc, "cols");
  const Json& data = require(doc, "data");
  if (!data.is_array()) parse_fail("field \"data\" must be an array");
  if (data.size() != rows * cols)
    parse_fail("rows*cols = " + std::to_string(rows * cols) + " but data has " +
               std::to_string(data.size()) + " entries");
  CMatrix m(rows, cols);
  for (std::size_t idx = 0; idx < data.size(); ++idx) {
    const Json& e = data[idx];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      parse_fail("data[" + std::to_string(idx) + "] must be [re, im]");
    m(idx / cols, idx % cols) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

Json frame_to_json(const Frame& f) {
  Json doc;
  doc["kind"] = "frame";
  doc["real"] = f.is_real();
  const Json m = matrix_to_json(f.synthesis());
  for (const auto& [k, v] : m.items()) doc[k] = v;
  return doc;
}

Frame frame_from_json(const Json& doc) {
  CMatrix v = matrix_from_json(doc);
  if (auto it = doc.find("kind"); it != doc.end() && *it != "frame")
    parse_fail("field \"kind\" must be \"frame\"");
  if (auto it = doc.find("real"); it != doc.end()) {
    if (!it->is_boolean()) parse_fail("field \"real\" must be a boolean");
    if (it->get<bool>() && !is_exactly_real(v))
      parse_fail("frame marked real has nonzero imaginary parts");
  }
  return Frame::from_synthesis(std::move(v));
}

Json steiner_to_json(const SteinerSystem& sys) {
  Json doc;
  doc["v"] = sys.v();
  doc["k"] = sys.k();
  doc["blocks"] = sys.blocks();
  return doc;
}

SteinerSystem steiner_from_json(const Json& doc) {
  const std::size_t v = require_count(doc, "v");
  const std::size_t k = require_count(doc, "k");
  if (auto it = doc.find("t"); it != doc.end() && *it != 2)
    parse_fail("only t = 2 designs are supported");
  const Json& blocks = require(doc, "blocks");
  if (!blocks.is_array()) parse_fail("field \"blocks\" must be an array");
  std::vector<Block> out;
  for (const auto& b : blocks) {
    if (!b.is_array()) parse_fail("each block must be an array of points");
    Block blk;
    for (const auto& p : b) {
      if (!p.is_number_unsigned()) parse_fail("block points must be non-negative integers");
      blk.push_back(p.get<std::size_t>());
    }
    out.push_back(std::move(blk));
  }
  return SteinerSystem(v, k, std::move(out));
}

Json to_json(const SteinerReport& rep) {
  Json doc;
  doc["passed"] = rep.passed;
  doc["v"] = rep.v;
  doc["uncovered"] = rep.uncovered;
  doc["overcovered"] = rep.overcovered;
  doc["wrong_size_blocks"] = rep.wrong_size_blocks;
  return doc;
}

Json to_json(const SrgParameters& srg) {
  Json doc;
  doc["v"] = srg.v;
  doc["k"] = srg.k;
  doc["lambda"] = srg.lambda_defined ? Json(srg.lambda) : Json(nullptr);
  doc["mu"] = srg.mu_defined ? Json(srg.mu) : Json(nullptr);
  return doc;
}

Json to_json(const HadamardReport& rep) {
  Json doc;
  doc["passed"] = rep.passed;
  doc["square"] = rep.square;
  doc["max_modulus_deviation"] = rep.max_modulus_deviation;
  doc["orthogonality_residual"] = rep.orthogonality_residual;
  return doc;
}

Json to_json(const FrameReport& rep) {
  Json doc;
  doc["n"] = rep.n;
  doc["r"] = rep.r;
  doc["is_untf"] = rep.is_untf;
  doc["is_etf"] = rep.is_etf;
  doc["coherence"] = rep.coherence;
  doc["coherence_spread"] = rep.coherence_spread;
  doc["welch"] = rep.welch;
  doc["welch_equality"] = rep.welch_equality;
  doc["untf_residuals"] = rep.untf_residuals;
  doc["gerzon_limit_real"] = rep.gerzon_limit_real;
  doc["gerzon_limit_complex"] = rep.gerzon_limit_complex;
  return doc;
}

Json to_json(const OverlapReport& rep) {
  Json doc;
  doc["min_eig_identity_form"] = rep.min_eig_identity_form;
  doc["min_eig_gram_form"] = rep.min_eig_gram_form;
  doc["identity_form_holds"] = rep.identity_form_holds;
  doc["gram_form_holds"] = rep.gram_form_holds;
  doc["forms_agree"] = rep.forms_agree;
  doc["overlap_condition"] = rep.overlap_condition;
  doc["passed"] = rep.passed;
  return doc;
}

Json to_json(const std::vector<SpectrumCluster>& spectrum) {
  Json arr = Json::array();
  for (const auto& c : spectrum) arr.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
  return arr;
}

Json to_json(const GapMatrix& gap) {
  Json doc;
  doc["identity_coeff"] = gap.identity_coeff;
  doc["ones_coeff"] = gap.ones_coeff;
  doc["min_eig"] = gap.min_eig;
  doc["kernel_dim"] = gap.kernel_dim;
  doc["positive_count"] = gap.positive_count;
  doc["negative_count"] = gap.negative_count;
  doc["spectrum"] = to_json(gap.spectrum);
  doc["passed"] = gap.passed;
  return doc;
}

Json to_json(const E4Report& rep) {
  Json doc;
  doc["even_entries_deviation"] = rep.even_entries_deviation;
  doc["odd_group_deviation"] = rep.odd_group_deviation;
  doc["gram_corner_deviation"] = rep.gram_corner_deviation;
  doc["min_eig"] = rep.min_eig;
  doc["spectral_norm"] = rep.spectral_norm;
  doc["asymmetry"] = rep.asymmetry;
  doc["even_entries_ok"] = rep.even_entries_ok;
  doc["odd_groups_ok"] = rep.odd_groups_ok;
  doc["gram_corner_ok"] = rep.gram_corner_ok;
  doc["psd_ok"] = rep.psd_ok;
  doc["passed"] = rep.passed;
  return doc;
}

Json to_json(const SparkResult& res) {
  Json doc;
  doc["spark"] = optional_json(res.spark);
  doc["cap"] = res.cap;
  doc["above_cap"] = res.above_cap();
  doc["witness"] = res.witness;
  doc["exact_arithmetic"] = res.exact_arithmetic;
  doc["subsets_examined"] = res.subsets_examined;
  return doc;
}

Json to_json(const CosparkResult& res) {
  Json doc;
  doc["cospark"] = res.cospark;
  doc["support"] = res.support;
  doc["exact_arithmetic"] = res.exact_arithmetic;
  doc["subsets_examined"] = res.subsets_examined;
  return doc;
}

Json to_json(const BoundReport& rep) {
  Json doc;
  doc["n"] = rep.n;
  doc["r"] = rep.r;
  doc["coherence"] = rep.coherence;
  Json bounds;
  bounds["gershgorin"] = optional_json(rep.gershgorin);
  bounds["nerf"] = optional_json(rep.nerf);
  bounds["corollary_spark"] = optional_json(rep.corollary_spark);
  bounds["corollary_sparsity"] = optional_json(rep.corollary_sparsity);
  doc["bounds"] = std::move(bounds);
  doc["spark_exact"] = optional_json(rep.spark_exact);
  doc["spark_above_cap"] = rep.spark_above_cap;
  doc["spark_cap"] = rep.spark_cap;
  doc["cospark_exact"] = optional_json(rep.cospark_exact);
  doc["exact_arithmetic"] = rep.exact_arithmetic;
  Json valid;
  valid["gershgorin"] = optional_json(rep.gershgorin_valid);
  valid["nerf"] = optional_json(rep.nerf_valid);
  valid["corollary_spark"] = optional_json(rep.corollary_spark_valid);
  valid["corollary_sparsity"] = optional_json(rep.corollary_sparsity_valid);
  doc["valid"] = std::move(valid);
  doc["all_valid"] = rep.all_valid();
  return doc;
}

Json to_json(const OverlapDeviationReport& rep) {
  Json doc;
  doc["d"] = rep.d;
  doc["e"] = rep.e;
  doc["fourth_power_a"] = rep.fourth_power_a;
  doc["fourth_power_b"] = rep.fourth_power_b;
  doc["overlap"] = rep.overlap;
  doc["lhs"] = rep.lhs;
  doc["rhs"] = rep.rhs;
  doc["passed"] = rep.passed;
  return doc;
}

Json to_json(const FamilyRow& row) {
  Json doc;
  doc["family"] = to_string(row.family);
  doc["q"] = row.q;
  doc["n"] = row.n;
  doc["r"] = row.r;
  doc["gershgorin"] = row.gershgorin;
  doc["nerf"] = row.nerf;
  doc["ours"] = row.ours;
  doc["table_gershgorin"] = row.table_gershgorin;
  doc["table_nerf"] = row.table_nerf;
  doc["table_ours"] = row.table_ours;
  doc["gershgorin_match"] = row.gershgorin_match();
  doc["nerf_match"] = row.nerf_match();
  doc["ours_match"] = row.ours_match();
  return doc;
}

std::string table1_csv(const std::vector<FamilyRow>& rows) {
  std::ostringstream os;
  os << "family,q,N,r,gershgorin,nerf,ours,table_gershgorin,table_nerf,table_ours,"
        "gershgorin_match,nerf_match,ours_match\n";
  for (const auto& row : rows) {
    os << to_string(row.family) << ',' << row.q << ',' << row.n << ',' << row.r << ','
       << shortest(row.gershgorin) << ',' << shortest(row.nerf) << ',' << shortest(row.ours)
       << ',' << row.table_gershgorin << ',' << row.table_nerf << ',' << row.table_ours << ','
       << (row.gershgorin_match() ? "true" : "false") << ','
       << (row.nerf_match() ? "true" : "false") << ','
       << (row.ours_match() ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace etfkit
