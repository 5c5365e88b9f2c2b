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

#include "entropic/functionals.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "entropic/errors.hpp"

namespace entropic::quantum {

namespace {

constexpr double kEigenFloor = 1e-300;

RealVector log_clamped(const RealVector& x) {
  return x.unaryExpr([](double v) { return std::log(std::max(v, kEigenFloor)); });
}

double log_trace_power_of_singular_values(const Matrix& m, double p) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const RealVector& s = svd.singularValues();
  RealVector terms(s.size());
  for (Index i = 0; i < s.size(); ++i) {
    terms(i) = s(i) > 0.0 ? p * std::log(s(i)) : -std::numeric_limits<double>::infinity();
  }
  return log_sum_exp(terms);
}

Matrix random_gaussian(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      const double re = g(rng);
      const double im = g(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Exponent and grids

Exponent Exponent::finite(double p) {
  if (!std::isfinite(p) || p < 1.0) {
    std::ostringstream os;
    os << "p must satisfy 1 <= p < inf, got " << p;
    throw DomainError(os.str());
  }
  return Exponent(p, false);
}

double Exponent::value() const {
  if (infinite_) throw DomainError("Exponent::value called on p = inf");
  return p_;
}

std::string Exponent::to_string() const {
  if (infinite_) return "inf";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), p_);
  return std::string(buf, res.ptr);
}

std::vector<double> alpha_grid(double min, double max, double step) {
  if (!(step > 0.0) || max < min) throw DomainError("alpha_grid: need step > 0 and max >= min");
  const auto count = static_cast<std::size_t>(std::llround((max - min) / step)) + 1;
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = min + static_cast<double>(k) * step;
  return out;
}

std::vector<Exponent> default_p_grid() {
  return {Exponent::finite(1.0), Exponent::finite(1.5), Exponent::finite(2.0), Exponent::finite(3.0),
          Exponent::finite(4.0), Exponent::finite(6.0), Exponent::finite(64.0), Exponent::infinity()};
}

// ---------------------------------------------------------------------------
// FunctionalEvaluator
//
// Everything is expressed in the eigenbasis of omega_0, where omega_0 is
// diag(nu) and omega_{-t} = W diag(nu) W* with W = F* e^{itH} F.

FunctionalEvaluator::FunctionalEvaluator(const QuantumSystem& sys, double t) : t_(t) {
  const auto& spec = sys.reference_state().spectrum();
  log_nu_ = spec.eigenvalues.array().log().matrix();
  basis0_ = spec.eigenvectors;
  const Matrix v = sys.propagator(t);
  basis_t_ = basis0_.adjoint() * v.adjoint() * basis0_;
}

double FunctionalEvaluator::operator()(Exponent p, double alpha) const {
  return p.is_infinite() ? infinite(alpha) : finite(p.value(), alpha);
}

double FunctionalEvaluator::finite(double p, double alpha) const {
  // [A B A] with A = diag(nu^{(1-a)/p}), B = W diag(nu^{2a/p}) W*. Writing
  // C = A W diag(nu^{a/p}) gives A B A = C C*, positive by construction.
  const RealVector outer = ((1.0 - alpha) / p * log_nu_).array().exp().matrix();
  const RealVector inner = (alpha / p * log_nu_).array().exp().matrix();
  const Matrix c = outer.cast<Complex>().asDiagonal() * basis_t_ * inner.cast<Complex>().asDiagonal();
  const Matrix bracket = c * c.adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(bracket, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DomainError("functional: eigensolver did not converge");
  return log_sum_exp(0.5 * p * log_clamped(solver.eigenvalues()));
}

double FunctionalEvaluator::infinite(double alpha) const {
  // -(1-a) S_0 - a S_t = (1-a) diag(log nu) + a W diag(log nu) W*
  Matrix exponent = alpha * basis_t_ * log_nu_.cast<Complex>().asDiagonal() * basis_t_.adjoint();
  exponent.diagonal() += ((1.0 - alpha) * log_nu_).cast<Complex>();
  exponent = 0.5 * (exponent + exponent.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(exponent, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DomainError("functional: eigensolver did not converge");
  return log_sum_exp(solver.eigenvalues());
}

double functional(const QuantumSystem& sys, Exponent p, double alpha, double t) {
  return FunctionalEvaluator(sys, t)(p, alpha);
}

FunctionalCurve functional_curve(const QuantumSystem& sys, Exponent p, double t, const std::vector<double>& alphas,
                                 std::string system_id) {
  FunctionalEvaluator eval(sys, t);
  FunctionalCurve curve{std::move(system_id), p, t, alphas, {}};
  curve.values.reserve(alphas.size());
  for (double a : alphas) curve.values.push_back(eval(p, a));
  return curve;
}

// ---------------------------------------------------------------------------
// Bridges

BridgeCheck renyi_bridge_check(const QuantumSystem& sys, double alpha, double t) {
  constexpr double kTol = 1e-10;
  const DensityMatrix omega_t = schrodinger_evolve(sys, sys.reference_state(), t);
  BridgeCheck out;
  out.value = renyi_relative_entropy(omega_t, sys.reference_state(), alpha);
  out.reference_alpha = sys.is_tri() ? alpha : 1.0 - alpha;
  out.reference = functional(sys, Exponent::finite(2.0), out.reference_alpha, t);
  out.residual = std::abs(out.value - out.reference);
  if (out.residual > kTol) throw InvariantViolation("Renyi bridge e_2 = S_alpha", out.residual, kTol);
  return out;
}

double naive_functional(const QuantumSystem& sys, double alpha, double t) {
  // In the omega_0 eigenbasis: tr(diag(nu) e^{K}) with K = -alpha (S_t - S_0).
  const auto& spec = sys.reference_state().spectrum();
  const RealVector log_nu = spec.eigenvalues.array().log().matrix();
  const Matrix w = spec.eigenvectors.adjoint() * sys.propagator(t).adjoint() * spec.eigenvectors;
  Matrix k = alpha * w * log_nu.cast<Complex>().asDiagonal() * w.adjoint();
  k.diagonal() -= (alpha * log_nu).cast<Complex>();
  k = 0.5 * (k + k.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(k, Eigen::ComputeEigenvectors);
  const Matrix& u = solver.eigenvectors();
  RealVector terms(u.cols());
  for (Index j = 0; j < u.cols(); ++j) {
    const double weight = u.col(j).cwiseAbs2().dot(spec.eigenvalues);
    terms(j) = solver.eigenvalues()(j) + std::log(weight);
  }
  return log_sum_exp(terms);
}

double variational_objective(const QuantumSystem& sys, const DensityMatrix& rho, double alpha, double t) {
  const HermitianOperator s0 = entropy_observable(sys);
  const HermitianOperator increment = heisenberg_evolve(sys, s0, t) - s0;  // t Sigma^t
  return relative_entropy(rho, sys.reference_state()) - alpha * rho.expectation(increment.matrix()).real();
}

VariationalMax variational_max(const QuantumSystem& sys, double alpha, double t, int trials, std::uint64_t seed) {
  const HermitianOperator s0 = entropy_observable(sys);
  const HermitianOperator st = heisenberg_evolve(sys, s0, t);
  const HermitianOperator increment = st - s0;
  const auto& omega0 = sys.reference_state();
  auto objective = [&](const DensityMatrix& rho) {
    return relative_entropy(rho, omega0) - alpha * rho.expectation(increment.matrix()).real();
  };

  const DensityMatrix maximizer = DensityMatrix::gibbs((1.0 - alpha) * s0 + alpha * st);
  VariationalMax out;
  out.closed_form = objective(maximizer);
  out.functional_residual = std::abs(out.closed_form - functional(sys, Exponent::infinity(), alpha, t));

  std::mt19937_64 rng(seed);
  const Index n = sys.dim();
  out.best_perturbed = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < trials; ++k) {
    const double eps = 1e-4 * std::pow(3e3, static_cast<double>(k) / std::max(1, trials - 1));
    const Matrix g = random_gaussian(n, rng);
    Matrix candidate;
    if (k % 2 == 0) {
      // convex mixture with a random full-rank state
      const Matrix noise = g * g.adjoint() / (g * g.adjoint()).trace().real();
      candidate = (1.0 - eps) * maximizer.matrix() + eps * noise;
    } else {
      // unitary rotation e^{i eps X} rho* e^{-i eps X}
      const auto x = eig(HermitianOperator(Matrix(0.5 * (g + g.adjoint()))));
      const Matrix u = x.apply_complex([eps](double e) { return std::exp(Complex(0.0, eps * e)); });
      candidate = u * maximizer.matrix() * u.adjoint();
    }
    candidate = 0.5 * (candidate + candidate.adjoint()).eval();
    out.best_perturbed = std::max(out.best_perturbed, objective(DensityMatrix::normalized(candidate)));
  }
  out.value = std::max(out.closed_form, out.best_perturbed);

  if (out.functional_residual > 1e-10) {
    throw InvariantViolation("variational formula e_inf", out.functional_residual, 1e-10);
  }
  if (out.best_perturbed - out.closed_form > 1e-9) {
    throw InvariantViolation("variational maximality", out.best_perturbed - out.closed_form, 1e-9);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Araki-Masuda norms and transfer operators

double araki_masuda_norm(const OperatorSpaceElement& a, const QuantumSystem& sys, double p) {
  if (p < 1.0 || !std::isfinite(p)) throw DomainError("araki_masuda_norm: p must satisfy 1 <= p < inf");
  if (a.rows() != sys.dim() || a.cols() != sys.dim()) throw DimensionError("araki_masuda_norm: shape mismatch");
  const Matrix m = a * sys.reference_state().power(1.0 / p).matrix();
  return std::exp(log_trace_power_of_singular_values(m, p) / p);
}

namespace {

// e^{-S_{-t}/q} e^{S_0/q} for any nonzero real q.
Matrix transfer_weight(const QuantumSystem& sys, double q, double t) {
  const HermitianOperator s0 = entropy_observable(sys);
  const HermitianOperator s_minus_t = heisenberg_evolve(sys, s0, -t);
  const Matrix left = matrix_function(s_minus_t, [q](double x) { return std::exp(-x / q); }).matrix();
  const Matrix right = matrix_function(s0, [q](double x) { return std::exp(x / q); }).matrix();
  return left * right;
}

}  // namespace

OperatorSpaceElement transfer_apply(const QuantumSystem& sys, double p, const OperatorSpaceElement& a, double t) {
  if (p < 1.0) throw DomainError("transfer_apply: p must be >= 1");
  if (a.rows() != sys.dim() || a.cols() != sys.dim()) throw DimensionError("transfer_apply: shape mismatch");
  return heisenberg_evolve(sys, a, -t) * transfer_weight(sys, p, t);
}

BridgeCheck transfer_functional(const QuantumSystem& sys, double p, double alpha, double t) {
  constexpr double kTol = 1e-10;
  if (alpha == 0.0) throw DomainError("transfer_functional: alpha = 0 makes the index p/alpha undefined");
  if (p < 1.0 || !std::isfinite(p)) throw DomainError("transfer_functional: p must satisfy 1 <= p < inf");
  // U_{p/alpha}(t) 1 = e^{-S_{-t} alpha/p} e^{S_0 alpha/p}
  const Matrix unit_image = transfer_weight(sys, p / alpha, t);
  const Matrix m = unit_image * sys.reference_state().power(1.0 / p).matrix();

  BridgeCheck out;
  out.value = log_trace_power_of_singular_values(m, p);
  out.reference_alpha = sys.is_tri() ? alpha : 1.0 - alpha;
  out.reference = functional(sys, Exponent::finite(p), out.reference_alpha, t);
  out.residual = std::abs(out.value - out.reference);
  if (out.residual > kTol) throw InvariantViolation("transfer-operator representation", out.residual, kTol);
  return out;
}

}  // namespace entropic::quantum
