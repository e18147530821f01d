/*
 * Copyright 2026 The c2pencil Authors
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

namespace c2pencil {

/// Error classes surfaced by the library. The CLI maps each to an exit code.
enum class ErrorKind {
  InvalidInput,
  FieldMismatch,
  DivisionByZero,
  NotSmooth,
  RepeatedPfaffianRoots,
  FieldTooSmall,
  BudgetExceeded,
  NotInStabilizer,
  VerificationFailure,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a computation needs roots or square roots outside the current
/// field and extension is disabled. `required_degree` is the degree of the
/// extension (over the current field) that would suffice.
class FieldTooSmall : public Error {
 public:
  FieldTooSmall(unsigned required_degree, const std::string& what)
      : Error(ErrorKind::FieldTooSmall, what), required_degree_(required_degree) {}

  unsigned required_degree() const noexcept { return required_degree_; }

 private:
  unsigned required_degree_;
};

}  // namespace c2pencil
