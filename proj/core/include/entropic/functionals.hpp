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
#include <string>
#include <vector>

#include "entropic/quantum.hpp"

namespace entropic::quantum {

/// Index p of the entropic functional family: a finite value p >= 1 or the
/// distinguished value infinity. The finite-p code path never sees infinity.
class Exponent {
 public:
  /// Throws DomainError unless 1 <= p < infinity.
  static Exponent finite(double p);
  static Exponent infinity() { return Exponent(0.0, true); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Throws DomainError for infinity.
  double value() const;
  /// "inf" for infinity, otherwise the shortest round-tripping decimal.
  std::string to_string() const;

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.p_ == b.p_);
  }
  /// Finite values ascending, infinity last.
  friend bool operator<(const Exponent& a, const Exponent& b) {
    if (a.infinite_ || b.infinite_) return !a.infinite_ && b.infinite_;
    return a.p_ < b.p_;
  }

 private:
  Exponent(double p, bool infinite) : p_(p), infinite_(infinite) {}
  double p_;
  bool infinite_;
};

/// alpha from `min` to `max` inclusive in steps of `step` (alpha_k = min + k*step).
std::vector<double> alpha_grid(double min = -1.0, double max = 2.0, double step = 0.05);
/// {1, 1.5, 2, 3, 4, 6, 64, inf}
std::vector<Exponent> default_p_grid();

struct FunctionalCurve {
  std::string system_id;
  Exponent p = Exponent::infinity();
  double t = 0.0;
  std::vector<double> alphas;
  std::vector<double> values;
};

/// Evaluates e_{p,t}(alpha) for one system and one time, sharing the
/// eigendecompositions of omega_0 and omega_{-t} across (p, alpha).
///
///   finite p:  log tr([e^{-(1-a)/p S_0} e^{-2a/p S_t} e^{-(1-a)/p S_0}]^{p/2})
///   p = inf:   log tr(e^{-(1-a) S_0 - a S_t})
///
/// with S_t = e^{itH} S_0 e^{-itH}, so e^{-c S_t} = omega_{-t}^c.
class FunctionalEvaluator {
 public:
  FunctionalEvaluator(const QuantumSystem& sys, double t);

  double operator()(Exponent p, double alpha) const;
  double t() const noexcept { return t_; }

 private:
  double finite(double p, double alpha) const;
  double infinite(double alpha) const;

  double t_;
  RealVector log_nu_;  // log eigenvalues of omega_0
  Matrix basis0_;      // eigenvectors of omega_0
  Matrix basis_t_;     // eigenvectors of omega_{-t} = e^{itH} omega_0 e^{-itH}
};

double functional(const QuantumSystem& sys, Exponent p, double alpha, double t);

FunctionalCurve functional_curve(const QuantumSystem& sys, Exponent p, double t, const std::vector<double>& alphas,
                                 std::string system_id = {});

/// A computed value alongside the independent reference it was checked against.
struct BridgeCheck {
  double value = 0.0;
  double reference = 0.0;
  double residual = 0.0;
  /// alpha at which the reference functional was evaluated (alpha or 1 - alpha).
  double reference_alpha = 0.0;
};

/// S_alpha(omega_t, omega_0), checked against e_{2,t}. Under TRI the
/// reference is e_{2,t}(alpha); otherwise the identity reads
/// e_{2,t}(1 - alpha) = S_alpha(omega_t, omega_0). Throws InvariantViolation
/// above 1e-10.
BridgeCheck renyi_bridge_check(const QuantumSystem& sys, double alpha, double t);

/// log omega_0(e^{-alpha t Sigma^t}): the direct quantization, which violates
/// e_t(1) = 0 whenever [H, omega_0] != 0 (generically).
double naive_functional(const QuantumSystem& sys, double alpha, double t);

/// S(rho, omega_0) - alpha t rho(Sigma^t).
double variational_objective(const QuantumSystem& sys, const DensityMatrix& rho, double alpha, double t);

struct VariationalMax {
  double value = 0.0;         // max over all evaluated states
  double closed_form = 0.0;   // objective at rho* = e^{-(1-a)S_0 - a S_t} / tr
  double best_perturbed = 0.0;
  double functional_residual = 0.0;  // |closed_form - e_{inf,t}(alpha)|
};

/// Evaluates the objective at the closed-form maximizer and at `trials`
/// seeded perturbations of it. Throws InvariantViolation if the closed form
/// misses e_{inf,t}(alpha) by more than 1e-10 or a perturbation exceeds it by
/// more than 1e-9.
VariationalMax variational_max(const QuantumSystem& sys, double alpha, double t, int trials = 16,
                               std::uint64_t seed = 0x5eedULL);

/// ||A||_p = (tr |A omega_0^{1/p}|^p)^{1/p}, from singular values. p >= 1.
double araki_masuda_norm(const OperatorSpaceElement& a, const QuantumSystem& sys, double p);

/// U_p(t) A = A_{-t} e^{-S_{-t}/p} e^{S_0/p}. Throws DomainError for p < 1.
OperatorSpaceElement transfer_apply(const QuantumSystem& sys, double p, const OperatorSpaceElement& a, double t);

/// log ||U_{p/alpha}(t) 1||_p^p for finite p >= 1 and alpha != 0. The index
/// p/alpha enters only through the powers of omega_t and omega_0, so any
/// nonzero alpha is accepted. The reference is e_{p,t}(alpha) for TRI systems
/// and e_{p,t}(1 - alpha) otherwise; InvariantViolation above 1e-10.
BridgeCheck transfer_functional(const QuantumSystem& sys, double p, double alpha, double t);

}  // namespace entropic::quantum
