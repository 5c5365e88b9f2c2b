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

#include <optional>
#include <string>
#include <vector>

#include "entropic/runner/config.hpp"

namespace entropic::runner {

enum class CheckStatus { kPass, kFail, kExpectedFail };

std::string to_string(CheckStatus s);

/// One invariant on one system (or family of systems). `observed` is compared
/// with `threshold` through `relation` ("<=", ">=" or ">"); grid sweeps report
/// their worst point.
struct VerifyRow {
  std::string module;
  std::string invariant;
  std::string system;
  double observed = 0.0;
  std::string relation;
  double threshold = 0.0;
  CheckStatus status = CheckStatus::kPass;
  std::string note;  // exception text when the check could not be evaluated
};

struct VerifyReport {
  std::vector<VerifyRow> rows;

  bool passed() const;
  std::size_t count(CheckStatus s) const;
  /// Aligned plain-text table with a summary line.
  std::string table() const;
  /// status,module,invariant,system,observed,relation,threshold
  std::string csv() const;
};

/// Runs the built-in battery (covering every module's invariants) plus the
/// systems of `cfg`, if given. Configured systems without time-reversal
/// invariance report symmetry-type checks as expected failures.
VerifyReport run_verify(const std::optional<ExperimentConfig>& cfg = std::nullopt);

}  // namespace entropic::runner
