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

#include <vector>

#include "entropic/quantum.hpp"
#include "entropic/spectral_measure.hpp"

namespace entropic::quantum {

/// A = sum_lambda lambda P_lambda with distinct lambda ascending.
struct ProjectionFamily {
  std::vector<double> eigenvalues;
  std::vector<HermitianOperator> projectors;

  /// Largest Frobenius residual among P^2 = P, sum P = 1 and P_a P_b = 0.
  double invariant_residual() const;
};

/// Groups eigenvalues of `a` whose consecutive gaps are at most
/// rel_tol * max(1, max|lambda|) and builds the projector of each group.
ProjectionFamily spectral_resolution(const HermitianOperator& a, double rel_tol = 1e-10);

/// Full counting statistics of the two-time measurement of S_0:
///   P_t(phi) = sum_{lambda' - lambda = t phi} tr(e^{-itH} omega_0 P_lambda e^{itH} P_lambda').
/// Atoms binned within 1e-10, weights below 1e-14 dropped, weights in
/// [-1e-12, 0) clamped to 0. Throws DomainError for t <= 0.
SpectralMeasure fcs_distribution(const QuantumSystem& sys, double t);

/// log sum_phi e^{-t alpha phi} P_t(phi). Throws DomainError on an empty measure.
double fcs_cgf(const SpectralMeasure& measure, double alpha, double t);

/// Delta_{omega_t|omega_0}(A) = omega_t A omega_0^{-1}.
OperatorSpaceElement relative_modular_apply(const QuantumSystem& sys, double t, const OperatorSpaceElement& a);

/// Spectral measure Q_t of -(1/t) log Delta_{omega_t|omega_0} for the vector
/// omega_0^{1/2}, built from the n^2 eigen-pairs |e_i><f_j| of Delta:
/// atoms -(1/t) log(mu_i / nu_j), weights nu_j |<e_i, f_j>|^2. Same binning
/// rule as fcs_distribution. Throws DomainError for t <= 0.
SpectralMeasure modular_spectral_measure(const QuantumSystem& sys, double t);

struct FcsModularIdentity {
  SpectralMeasure fcs;
  SpectralMeasure modular;
  /// TV(P_t, Q_t). Zero (to rounding) for TRI systems.
  double tv_distance = 0.0;
  /// TV(Q_t, reflect_and_tilt(P_t)), i.e. Q_t(-phi) = e^{-t phi} P_t(phi);
  /// holds for every system.
  double tilted_tv_distance = 0.0;
};

/// Computes P_t and Q_t and compares them. Throws InvariantViolation when the
/// applicable identity (P_t = Q_t under TRI, the tilted form otherwise) is
/// off by more than 1e-10 in total variation.
FcsModularIdentity fcs_modular_identity(const QuantumSystem& sys, double t);

}  // namespace entropic::quantum
