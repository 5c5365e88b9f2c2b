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

#include <string>

#include "entropic/runner/config.hpp"
#include "entropic/runner/result_table.hpp"

namespace entropic::runner {

/// Quantum systems only. Curve rows ordered by system, p (infinity last), t,
/// alpha; check rows for Kawasaki endpoints and, on TRI systems, the
/// e(alpha) = e(1 - alpha) symmetry at every grid point.
ResultTable run_functionals(const ExperimentConfig& cfg);

/// Quantum systems only. P and Q distribution rows, the CGF curve (p = 2) and
/// checks: TV(P, Q) on TRI systems, the reflected-tilt relation otherwise, and
/// the CGF identity at every alpha.
ResultTable run_fcs(const ExperimentConfig& cfg);

/// Classical systems only, over the integer classical_t list: curves (empty
/// p column), ES distribution rows and symmetry/endpoint/identity checks.
ResultTable run_classical(const ExperimentConfig& cfg);

/// JSON description of every reservoir system in the config (the canonical
/// model when there is none): matrices, partition functions, mean entropy
/// production at each t and the decomposition residual.
std::string describe_models(const ExperimentConfig& cfg);

}  // namespace entropic::runner
