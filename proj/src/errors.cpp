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

#include "etfkit/errors.hpp"

namespace etfkit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::InvalidDesign: return "InvalidDesign";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotStronglyRegular: return "NotStronglyRegular";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadResidueClass: return "BadResidueClass";
    case ErrorCode::NotHadamard: return "NotHadamard";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotAFrame: return "NotAFrame";
    case ErrorCode::NotUntf: return "NotUntf";
    case ErrorCode::NotEtf: return "NotEtf";
    case ErrorCode::FullRank: return "FullRank";
    case ErrorCode::GerzonViolation: return "GerzonViolation";
    case ErrorCode::GerzonSaturated: return "GerzonSaturated";
    case ErrorCode::ComplexFrame: return "ComplexFrame";
    case ErrorCode::SingularX2: return "SingularX2";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooLargeForDense: return "TooLargeForDense";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace etfkit
