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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace framedual {

enum class ErrorCode {
  NotSquare,
  NotHermitian,
  DomainError,
  Singular,
  NotIsometry,
  DimensionMismatch,
  NonFinite,
  NotAFrame,
  NotParseval,
  ExcessTooSmall,
  BlockMismatch,
  InadmissibleParams,
  NonCommuting,
  BadEpsilon,
  NotUnit,
  ExcessNotOne,
  NotDual,
  NotRankOneDifference,
  UnknownFixture,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every precondition failure in the library is reported through this type;
/// `code()` lets callers (the CLI in particular) branch without parsing text.
class FrameError : public std::runtime_error {
 public:
  FrameError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace framedual
