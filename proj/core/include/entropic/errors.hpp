// Copyright 2026 The entropic Authors
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

namespace entropic {

/// Operand shapes do not match (vector lengths, matrix dimensions).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input lies outside the mathematical domain of an operation: a state that
/// is not faithful, p < 1, a non-positive time where one is required.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A cross-check built into an operation failed at its stated tolerance.
class InvariantViolation : public std::runtime_error {
 public:
  InvariantViolation(const std::string& name, double residual, double tolerance);

  const std::string& name() const noexcept { return name_; }
  double residual() const noexcept { return residual_; }
  double tolerance() const noexcept { return tolerance_; }

 private:
  std::string name_;
  double residual_;
  double tolerance_;
};

}  // namespace entropic
