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

#include <numbers>

#include "etfkit/errors.hpp"
#include "etfkit/hadamard.hpp"

using namespace etfkit;

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

}  // namespace

TEST_CASE("sylvester small orders") {
  CHECK(sylvester_signs(0) == IntMatrix::Ones(1, 1));
  IntMatrix h1(2, 2);
  h1 << 1, 1, 1, -1;
  CHECK(sylvester_signs(1) == h1);
  const IntMatrix h2 = sylvester_signs(2);
  CHECK(h2 * h2.transpose() == 4 * IntMatrix::Identity(4, 4));
  CHECK(is_hadamard_exact(sylvester_signs(3)));
  CHECK(verify_hadamard(sylvester(3)).passed);
  CHECK(code_of([] { sylvester_signs(11); }) == ErrorCode::TooLarge);
}

TEST_CASE("dft matrices") {
  CHECK(dft(1).isApprox(CMatrix::Ones(1, 1)));
  CMatrix h2(2, 2);
  h2 << 1, 1, 1, -1;
  CHECK((dft(2) - h2).cwiseAbs().maxCoeff() < 1e-15);
  const CMatrix h4 = dft(4);
  const Complex i(0, 1);
  CHECK(std::abs(h4(1, 0) - 1.0) < 1e-15);
  CHECK(std::abs(h4(1, 1) - i) < 1e-15);
  CHECK(std::abs(h4(1, 2) + 1.0) < 1e-15);
  CHECK(std::abs(h4(1, 3) + i) < 1e-15);
  CHECK(verify_hadamard(dft(5)).passed);
  for (int n = 1; n <= 64; ++n) {
    CAPTURE(n);
    const CMatrix h = dft(n);
    const CMatrix resid = h * h.adjoint() - double(n) * CMatrix::Identity(n, n);
    CHECK(resid.cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("paley I") {
  for (std::uint32_t q : {3u, 7u, 11u, 19u, 23u, 27u, 31u}) {
    CAPTURE(q);
    const IntMatrix h = paley_i_signs(q);
    CHECK(h.rows() == q + 1);
    CHECK(h * h.transpose() == std::int64_t(q + 1) * IntMatrix::Identity(q + 1, q + 1));
    CHECK(h.cwiseAbs() == IntMatrix::Ones(q + 1, q + 1));
  }
  CHECK(code_of([] { paley_i_signs(5); }) == ErrorCode::BadResidueClass);
  CHECK(code_of([] { paley_i_signs(15); }) == ErrorCode::NotPrimePower);
}

TEST_CASE("real hadamard recipes") {
  auto h4 = real_hadamard(4);
  REQUIRE(h4);
  CHECK(h4->recipe == "sylvester(2)");
  CHECK(h4->signs == sylvester_signs(2));

  auto h12 = real_hadamard(12);
  REQUIRE(h12);
  CHECK(h12->recipe == "paley_i(11)");
  CHECK(is_hadamard_exact(h12->signs));

  for (std::int64_t n : {3, 5, 6, 7, 10}) CHECK_FALSE(real_hadamard(n));
  for (std::int64_t n : {1, 2, 8, 16, 20, 24, 28, 32, 48}) {
    CAPTURE(n);
    auto h = real_hadamard(n);
    REQUIRE(h);
    CHECK(is_hadamard_exact(h->signs));
  }
}

TEST_CASE("kronecker products stay hadamard") {
  const IntMatrix parts[] = {sylvester_signs(1), sylvester_signs(2), paley_i_signs(3),
                             paley_i_signs(7), paley_i_signs(11)};
  for (const auto& a : parts)
    for (const auto& b : parts) CHECK(is_hadamard_exact(kronecker(a, b)));
}

TEST_CASE("verify_hadamard failures") {
  auto rep = verify_hadamard(CMatrix::Identity(2, 2));
  CHECK_FALSE(rep.passed);
  CHECK(rep.max_modulus_deviation == doctest::Approx(1.0));
  CHECK_FALSE(verify_hadamard(CMatrix::Ones(2, 3)).passed);
  CHECK_FALSE(verify_hadamard(CMatrix::Ones(2, 3)).square);
  CHECK_FALSE(verify_hadamard(CMatrix::Ones(2, 2)).passed);
}
