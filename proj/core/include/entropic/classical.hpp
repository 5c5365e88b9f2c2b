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

#include "entropic/linalg.hpp"
#include "entropic/spectral_measure.hpp"

/// Finite classical dynamical systems: phase space {zeta_0..zeta_N} with the
/// cyclic shift phi(zeta_j) = zeta_{j+1 mod N+1} and a faithful reference
/// probability vector omega_0. Time is an integer.
namespace entropic::classical {

class ClassicalObservable {
 public:
  ClassicalObservable() = default;
  explicit ClassicalObservable(RealVector values) : values_(std::move(values)) {}
  static ClassicalObservable constant(Index n, double c) { return ClassicalObservable(RealVector::Constant(n, c)); }

  Index size() const noexcept { return values_.size(); }
  const RealVector& values() const noexcept { return values_; }
  double operator()(Index j) const { return values_(j); }

  friend ClassicalObservable operator*(const ClassicalObservable& f, const ClassicalObservable& g);
  friend ClassicalObservable operator-(const ClassicalObservable& f, const ClassicalObservable& g);

 private:
  RealVector values_;
};

class ClassicalState {
 public:
  /// Requires every entry > 1e-300 and a total of 1 within 1e-12.
  explicit ClassicalState(RealVector probabilities);
  static ClassicalState normalized(RealVector weights);
  static ClassicalState uniform(Index n);

  Index size() const noexcept { return p_.size(); }
  const RealVector& probabilities() const noexcept { return p_; }
  double operator()(Index j) const { return p_(j); }

  /// rho(f) = sum_zeta f(zeta) rho(zeta).
  double expectation(const ClassicalObservable& f) const;

 private:
  RealVector p_;
};

class ClassicalSystem {
 public:
  explicit ClassicalSystem(ClassicalState reference_state);

  Index size() const noexcept { return omega_.size(); }
  const ClassicalState& reference_state() const noexcept { return omega_; }

  /// omega_0(zeta_j) = omega_0(zeta_{N-j}) for all j within `tol`; the time
  /// reversal is theta(zeta_j) = zeta_{N-j}.
  bool is_tri(double tol = 1e-12) const;

 private:
  ClassicalState omega_;
};

/// f_t(zeta_j) = f(zeta_{j+t mod N+1}); t may be negative.
ClassicalObservable evolve_observable(const ClassicalSystem& sys, const ClassicalObservable& f, std::int64_t t);

/// rho_t(zeta) = rho(phi^{-t} zeta), so that rho_t(f) = rho(f_t).
ClassicalState evolve_state(const ClassicalSystem& sys, const ClassicalState& rho, std::int64_t t);

/// S(rho, nu) = sum rho log(nu / rho) <= 0.
double relative_entropy(const ClassicalState& rho, const ClassicalState& nu);

/// S_alpha(rho, nu) = log sum rho^{1-alpha} nu^alpha.
double renyi_entropy(const ClassicalState& rho, const ClassicalState& nu, double alpha);

/// S_0 = -log omega_0.
ClassicalObservable entropy_observable(const ClassicalSystem& sys);

/// sigma = S_1 - S_0 = -log(omega_0 o phi / omega_0).
ClassicalObservable entropy_production_observable(const ClassicalSystem& sys);

/// Sigma^t = (S_t - S_0)/t, checked against t^{-1} sum_{s=0}^{t-1} sigma_s
/// (InvariantViolation above 1e-12). Throws DomainError for t <= 0.
ClassicalObservable mean_ep_observable(const ClassicalSystem& sys, std::int64_t t);

/// e_t(alpha) = log omega_0(e^{-alpha t Sigma^t}); exactly 0 at alpha = 0.
double functional(const ClassicalSystem& sys, double alpha, std::int64_t t);

/// p^t(lambda) = omega_0({Sigma^t = lambda}), values grouped within 1e-10.
SpectralMeasure es_distribution(const ClassicalSystem& sys, std::int64_t t);

struct VariationalResult {
  double value = 0.0;             // objective at the closed-form maximizer
  ClassicalState maximizer = ClassicalState::uniform(1);
  double best_perturbed = 0.0;    // largest objective over the random perturbations
  double functional_residual = 0.0;
};

/// S(rho, omega_0) - alpha t rho(Sigma^t).
double variational_objective(const ClassicalSystem& sys, const ClassicalState& rho, double alpha, std::int64_t t);

/// Maximizes the objective in closed form (rho* ~ omega_0 e^{-alpha t Sigma^t})
/// and probes `trials` (>= 10) seeded perturbations of rho*. Throws
/// InvariantViolation if the value differs from functional() by more than
/// 1e-12 or a perturbation beats it by more than 1e-10.
VariationalResult variational_functional(const ClassicalSystem& sys, double alpha, std::int64_t t, int trials = 16,
                                         std::uint64_t seed = 0x5eedULL);

struct CheckedValue {
  double value = 0.0;
  double reference = 0.0;
  double residual = 0.0;
};

/// S_alpha(omega_t, omega_0), compared with functional(); throws
/// InvariantViolation above 1e-12.
CheckedValue renyi_identity_check(const ClassicalSystem& sys, double alpha, std::int64_t t);

/// ||f||_p = (sum |f|^p omega_0)^{1/p}.
double lp_norm(const ClassicalSystem& sys, const ClassicalObservable& f, double p);

/// U_p(t) f = f_{-t} e^{-S_{-t}/p} e^{S_0/p}. Throws DomainError for p < 1.
ClassicalObservable transfer_apply(const ClassicalSystem& sys, double p, const ClassicalObservable& f,
                                   std::int64_t t);

/// log ||U_{p/alpha}(t) 1||_p^p for alpha != 0. The index p/alpha enters only
/// through the weight e^{alpha (S_0 - S_{-t})/p}, so any nonzero alpha is
/// accepted. Equals e_t(alpha) for TRI systems and e_t(1 - alpha) in general.
double transfer_functional(const ClassicalSystem& sys, double p, double alpha, std::int64_t t);

}  // namespace entropic::classical
