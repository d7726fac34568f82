/*
 * Copyright 2026 The mdsarray Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mdsarray {

enum class Errc {
  malformed_polynomial,
  not_primitive,
  division_by_zero,
  undefined_zech,
  duplicate_evaluation_point,
  duplicate_point,
  singular_pair,
  too_large,
  not_superregular,
  dimension_mismatch,
  parameter_violation,
  singular_system,
  wrong_matrix_kind,
  degenerate_relation,
  unsupported_radius,
  invalid_config,
  io,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::malformed_polynomial: return "MalformedPolynomial";
    case Errc::not_primitive: return "NotPrimitive";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::undefined_zech: return "UndefinedZech";
    case Errc::duplicate_evaluation_point: return "DuplicateEvaluationPoint";
    case Errc::duplicate_point: return "DuplicatePoint";
    case Errc::singular_pair: return "SingularPair";
    case Errc::too_large: return "TooLarge";
    case Errc::not_superregular: return "NotSuperregular";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::parameter_violation: return "ParameterViolation";
    case Errc::singular_system: return "SingularSystem";
    case Errc::wrong_matrix_kind: return "WrongMatrixKind";
    case Errc::degenerate_relation: return "DegenerateRelation";
    case Errc::unsupported_radius: return "UnsupportedRadius";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::io: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the Errc codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mdsarray
