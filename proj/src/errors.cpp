// Copyright 2026 The framedual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "framedual/errors.hpp"

namespace framedual {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotAFrame: return "NotAFrame";
    case ErrorCode::NotParseval: return "NotParseval";
    case ErrorCode::ExcessTooSmall: return "ExcessTooSmall";
    case ErrorCode::BlockMismatch: return "BlockMismatch";
    case ErrorCode::InadmissibleParams: return "InadmissibleParams";
    case ErrorCode::NonCommuting: return "NonCommuting";
    case ErrorCode::BadEpsilon: return "BadEpsilon";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::ExcessNotOne: return "ExcessNotOne";
    case ErrorCode::NotDual: return "NotDual";
    case ErrorCode::NotRankOneDifference: return "NotRankOneDifference";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace framedual
