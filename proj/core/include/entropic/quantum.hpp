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

#include "entropic/linalg.hpp"

namespace entropic::quantum {

/// Strictly positive unit-trace density matrix. The eigendecomposition is
/// computed once at construction and kept alongside the matrix.
class DensityMatrix {
 public:
  /// Checks: Hermitian within 1e-12, trace 1 within 1e-12, min eigenvalue
  /// > 1e-12 * max eigenvalue. Violations throw DomainError.
  explicit DensityMatrix(const Matrix& m);

  /// Divides by the trace before validating.
  static DensityMatrix normalized(const Matrix& m);
  /// e^{-K} / tr e^{-K}, evaluated with the spectrum shifted for stability.
  static DensityMatrix gibbs(const HermitianOperator& k);
  static DensityMatrix diagonal(const RealVector& probabilities);
  static DensityMatrix maximally_mixed(Index n);

  Index dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  const SpectralDecomposition& spectrum() const noexcept { return spectrum_; }
  HermitianOperator as_operator() const { return HermitianOperator(m_); }

  HermitianOperator log() const;
  HermitianOperator power(double s) const;

  /// tr(A rho).
  Complex expectation(const Matrix& a) const;

  /// U rho U* for unitary U, reusing the stored spectrum.
  DensityMatrix conjugated(const Matrix& unitary) const;

 private:
  DensityMatrix(Matrix m, SpectralDecomposition s) : m_(std::move(m)), spectrum_(std::move(s)) {}
  static void validate(const SpectralDecomposition& s, double trace);

  Matrix m_;
  SpectralDecomposition spectrum_;
};

/// Finite-dimensional quantum dynamical system (K, H, omega_0). When `tri` is
/// set, complex conjugation in the standard basis is the time reversal, so H
/// and omega_0 must have real entries within 1e-12.
class QuantumSystem {
 public:
  QuantumSystem(HermitianOperator hamiltonian, DensityMatrix reference_state, bool tri);

  Index dim() const noexcept { return hamiltonian_.dim(); }
  const HermitianOperator& hamiltonian() const noexcept { return hamiltonian_; }
  const DensityMatrix& reference_state() const noexcept { return reference_; }
  bool is_tri() const noexcept { return tri_; }
  const SpectralDecomposition& hamiltonian_spectrum() const noexcept { return h_spectrum_; }

  /// e^{-itH}, from the eigendecomposition of H.
  Matrix propagator(double t) const;

  /// |[H, omega_0]|_F.
  double commutator_norm() const;

 private:
  HermitianOperator hamiltonian_;
  DensityMatrix reference_;
  bool tri_;
  SpectralDecomposition h_spectrum_;
};

/// A_t = e^{itH} A e^{-itH}.
HermitianOperator heisenberg_evolve(const QuantumSystem& sys, const HermitianOperator& a, double t);
Matrix heisenberg_evolve(const QuantumSystem& sys, const Matrix& a, double t);

/// rho_t = e^{-itH} rho e^{itH}.
DensityMatrix schrodinger_evolve(const QuantumSystem& sys, const DensityMatrix& rho, double t);

/// S(rho, nu) = tr(rho (log nu - log rho)) <= 0.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& nu);

/// S_alpha(rho, nu) = log tr(rho^alpha nu^{1-alpha}).
double renyi_relative_entropy(const DensityMatrix& rho, const DensityMatrix& nu, double alpha);

/// S_0 = -log omega_0.
HermitianOperator entropy_observable(const QuantumSystem& sys);

/// S_t = e^{itH} S_0 e^{-itH}.
HermitianOperator evolved_entropy_observable(const QuantumSystem& sys, double t);

/// sigma = -i[H, log omega_0].
HermitianOperator entropy_production_observable(const QuantumSystem& sys);

/// Sigma^t = (S_t - S_0)/t, without the quadrature cross-check.
HermitianOperator mean_ep_exact(const QuantumSystem& sys, double t);

/// t^{-1} int_0^t sigma_s ds by adaptive Simpson (per-entry tolerance `tol`).
HermitianOperator mean_ep_quadrature(const QuantumSystem& sys, double t, double tol = 1e-9);

/// Sigma^t. Computes both the exact difference and the time average of
/// sigma_s and throws InvariantViolation if they differ by more than 1e-8.
HermitianOperator mean_ep_observable(const QuantumSystem& sys, double t);

/// omega_0(Sigma^t).
double mean_entropy_production(const QuantumSystem& sys, double t);

}  // namespace entropic::quantum
