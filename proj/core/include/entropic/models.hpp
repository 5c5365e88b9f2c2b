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

#include <cstdint>

#include "entropic/classical.hpp"
#include "entropic/quantum.hpp"

namespace entropic::models {

using quantum::QuantumSystem;

/// Left and right subsystems in Gibbs states at beta_l, beta_r, coupled by V
/// on K_l (x) K_r. The left factor is the slow (row-major Kronecker) index.
struct ReservoirModel {
  HermitianOperator h_left;
  HermitianOperator h_right;
  double beta_left = 1.0;
  double beta_right = 1.0;
  HermitianOperator coupling;
  double z_left = 1.0;   // tr e^{-beta_l H_l}
  double z_right = 1.0;  // tr e^{-beta_r H_r}
  QuantumSystem assembled;

  Index dim_left() const noexcept { return h_left.dim(); }
  Index dim_right() const noexcept { return h_right.dim(); }
  /// H_l (x) 1 and 1 (x) H_r on the product space.
  HermitianOperator left_on_product() const;
  HermitianOperator right_on_product() const;
};

/// H = H_l (x) 1 + 1 (x) H_r + V, omega_0 = omega_l (x) omega_r with
/// omega_{l/r} = e^{-beta H_{l/r}} / Z_{l/r}. The TRI flag is set iff H_l,
/// H_r and V are all real. Throws DomainError for beta <= 0 and
/// DimensionError when V does not act on the product space.
ReservoirModel build_two_reservoir(const HermitianOperator& h_left, const HermitianOperator& h_right,
                                   double beta_left, double beta_right, const HermitianOperator& coupling);

/// Two qubits, H_{l/r} = diag(0, 1), V = epsilon sigma_x (x) sigma_x.
ReservoirModel canonical_two_qubit_model(double epsilon = 0.25, double beta_left = 1.0, double beta_right = 2.0);

struct Fluxes {
  HermitianOperator left;   // Phi_l = i[H_l, V]
  HermitianOperator right;  // Phi_r = i[H_r, V]
};

Fluxes flux_observables(const ReservoirModel& model);

enum class Side { kLeft, kRight };

/// |H_{s,t} - H_s + int_0^t Phi_{s,u} du|_F, the integral by adaptive
/// Simpson with per-entry tolerance `tol`.
double flux_balance_residual(const ReservoirModel& model, Side side, double t, double tol = 1e-10);

/// -beta_l Phi_l - beta_r Phi_r. Throws InvariantViolation if it differs from
/// -i[H, log omega_0] by more than 1e-10 (Frobenius).
HermitianOperator entropy_production_decomposition(const ReservoirModel& model);

/// Seeded random quantum system. H is drawn from a Gaussian ensemble (real
/// symmetric when `tri`, complex Hermitian otherwise) scaled by 1/sqrt(dim);
/// omega_0 = e^{-R}/tr e^{-R} with R from the same ensemble scaled by
/// `spread`. Redraws (up to 100 times) while |[H, omega_0]|_F < 1e-6.
/// Throws DomainError for dim < 2, spread <= 0, or exhausted attempts.
QuantumSystem random_system(int dim, bool tri, std::uint64_t seed, double spread = 1.0);

/// Seeded random classical system: omega_0 ~ e^{-spread g} with Gaussian g,
/// made palindromic (omega_0(zeta_j) = omega_0(zeta_{N-j})) when `tri`.
classical::ClassicalSystem random_classical_system(int size, bool tri, std::uint64_t seed, double spread = 1.0);

}  // namespace entropic::models
