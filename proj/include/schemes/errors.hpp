// Copyright 2026 The schemetool authors
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

#ifndef SCHEMES_ERRORS_HPP
#define SCHEMES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace schemes {

enum class ErrorCode {
  NotAPartition,
  NotTransposeClosed,
  DiagonalNotUnionOfColors,
  IntersectionNumbersNotConstant,
  InvalidColor,
  NotHomogeneous,
  NotFiberUnion,
  NotAPermutation,
  PartitionNotValid,
  DimensionMismatch,
  ExtractionUnstable,
  TooFewPoints,
  PatternViolation,
  WellOrderingFailed,
  NoneFound,
  IdealViolation,
  BadInput,
};

const char* error_name(ErrorCode code);

/// All domain errors carry a machine-readable code plus a witness message.
class SchemeError : public std::runtime_error {
 public:
  SchemeError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace schemes

#endif  // SCHEMES_ERRORS_HPP
