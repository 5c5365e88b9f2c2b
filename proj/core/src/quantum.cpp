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

#include "entropic/quantum.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "entropic/errors.hpp"
#include "entropic/quadrature.hpp"

namespace entropic::quantum {

namespace {

constexpr double kStateTol = 1e-12;

void require_same_dim(Index a, Index b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionError(os.str());
  }
}

void require_positive_time(double t, const char* what) {
  if (!(t > 0.0)) {
    std::ostringstream os;
    os << what << ": time must be > 0, got " << t;
    throw DomainError(os.str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// DensityMatrix

void DensityMatrix::validate(const SpectralDecomposition& s, double trace) {
  if (std::abs(trace - 1.0) > kStateTol) {
    std::ostringstream os;
    os << "density matrix trace is " << trace << ", expected 1";
    throw DomainError(os.str());
  }
  if (!is_strictly_positive(s, kStateTol)) {
    std::ostringstream os;
    os << "density matrix is not faithful: eigenvalues in [" << s.min() << ", " << s.max() << "]";
    throw DomainError(os.str());
  }
}

DensityMatrix::DensityMatrix(const Matrix& m) {
  auto h = HermitianOperator::checked(m, kStateTol);
  spectrum_ = eig(h);
  validate(spectrum_, h.trace());
  m_ = h.matrix();
}

DensityMatrix DensityMatrix::normalized(const Matrix& m) {
  auto h = HermitianOperator::checked(m, kStateTol);
  const double tr = h.trace();
  if (!(tr > 0.0)) throw DomainError("density matrix has non-positive trace");
  return DensityMatrix(Matrix(h.matrix() / tr));
}

DensityMatrix DensityMatrix::gibbs(const HermitianOperator& k) {
  auto s = eig(k);
  const double lo = s.min();
  // e^{-k} reverses the order of the spectrum of k; keep eigenvalues ascending
  RealVector w = (-(s.eigenvalues.reverse().array() - lo)).exp().matrix();
  w /= w.sum();
  SpectralDecomposition rho_spec{w, s.eigenvectors.rowwise().reverse()};
  validate(rho_spec, w.sum());
  Matrix m = rho_spec.reconstruct();
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(m), std::move(rho_spec));
}

DensityMatrix DensityMatrix::diagonal(const RealVector& probabilities) {
  return DensityMatrix(Matrix(probabilities.cast<Complex>().asDiagonal()));
}

DensityMatrix DensityMatrix::maximally_mixed(Index n) {
  return DensityMatrix(Matrix(Matrix::Identity(n, n) / static_cast<double>(n)));
}

HermitianOperator DensityMatrix::log() const {
  return spectrum_.apply([](double x) { return std::log(x); });
}

HermitianOperator DensityMatrix::power(double s) const {
  return spectrum_.apply([s](double x) { return std::pow(x, s); });
}

Complex DensityMatrix::expectation(const Matrix& a) const {
  require_same_dim(a.rows(), dim(), "expectation");
  return trace_of_product(a, m_);
}

DensityMatrix DensityMatrix::conjugated(const Matrix& unitary) const {
  require_same_dim(unitary.rows(), dim(), "conjugated");
  Matrix m = unitary * m_ * unitary.adjoint();
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(m), SpectralDecomposition{spectrum_.eigenvalues, unitary * spectrum_.eigenvectors});
}

// ---------------------------------------------------------------------------
// QuantumSystem

QuantumSystem::QuantumSystem(HermitianOperator hamiltonian, DensityMatrix reference_state, bool tri)
    : hamiltonian_(std::move(hamiltonian)), reference_(std::move(reference_state)), tri_(tri) {
  require_same_dim(hamiltonian_.dim(), reference_.dim(), "QuantumSystem");
  if (tri_) {
    if (!hamiltonian_.is_real(kStateTol)) throw DomainError("TRI system: Hamiltonian has non-real entries");
    if (reference_.matrix().imag().cwiseAbs().maxCoeff() > kStateTol) {
      throw DomainError("TRI system: reference state has non-real entries");
    }
  }
  h_spectrum_ = eig(hamiltonian_);
}

Matrix QuantumSystem::propagator(double t) const {
  return h_spectrum_.apply_complex([t](double e) { return std::exp(Complex(0.0, -t * e)); });
}

double QuantumSystem::commutator_norm() const {
  return frobenius(commutator(hamiltonian_.matrix(), reference_.matrix()));
}

// ---------------------------------------------------------------------------
// Evolution

HermitianOperator heisenberg_evolve(const QuantumSystem& sys, const HermitianOperator& a, double t) {
  return HermitianOperator(heisenberg_evolve(sys, a.matrix(), t));
}

Matrix heisenberg_evolve(const QuantumSystem& sys, const Matrix& a, double t) {
  require_same_dim(a.rows(), sys.dim(), "heisenberg_evolve");
  const Matrix v = sys.propagator(t);
  return v.adjoint() * a * v;
}

DensityMatrix schrodinger_evolve(const QuantumSystem& sys, const DensityMatrix& rho, double t) {
  require_same_dim(rho.dim(), sys.dim(), "schrodinger_evolve");
  return rho.conjugated(sys.propagator(t));
}

// ---------------------------------------------------------------------------
// Entropies

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& nu) {
  require_same_dim(rho.dim(), nu.dim(), "relative_entropy");
  const auto& r = rho.spectrum();
  const auto& n = nu.spectrum();
  const Eigen::MatrixXd overlap = (r.eigenvectors.adjoint() * n.eigenvectors).cwiseAbs2();
  const RealVector log_nu = n.eigenvalues.array().log().matrix();
  double cross = 0.0;
  double self = 0.0;
  for (Index i = 0; i < r.dim(); ++i) {
    const double mu = r.eigenvalues(i);
    cross += mu * overlap.row(i).dot(log_nu);
    self += mu * std::log(mu);
  }
  return cross - self;
}

double renyi_relative_entropy(const DensityMatrix& rho, const DensityMatrix& nu, double alpha) {
  require_same_dim(rho.dim(), nu.dim(), "renyi_relative_entropy");
  const auto& r = rho.spectrum();
  const auto& n = nu.spectrum();
  const Eigen::MatrixXd overlap = (r.eigenvectors.adjoint() * n.eigenvectors).cwiseAbs2();
  const Index d = r.dim();
  RealVector terms(d * d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      const double w = overlap(i, j);
      terms(i * d + j) = w > 0.0 ? alpha * std::log(r.eigenvalues(i)) + (1.0 - alpha) * std::log(n.eigenvalues(j)) +
                                       std::log(w)
                                 : -std::numeric_limits<double>::infinity();
    }
  }
  return log_sum_exp(terms);
}

// ---------------------------------------------------------------------------
// Entropy observables

HermitianOperator entropy_observable(const QuantumSystem& sys) { return -sys.reference_state().log(); }

HermitianOperator evolved_entropy_observable(const QuantumSystem& sys, double t) {
  return heisenberg_evolve(sys, entropy_observable(sys), t);
}

HermitianOperator entropy_production_observable(const QuantumSystem& sys) {
  const Matrix log_omega = sys.reference_state().log().matrix();
  return HermitianOperator(Matrix(Complex(0.0, -1.0) * commutator(sys.hamiltonian().matrix(), log_omega)));
}

HermitianOperator mean_ep_exact(const QuantumSystem& sys, double t) {
  require_positive_time(t, "mean_ep_observable");
  const HermitianOperator s0 = entropy_observable(sys);
  return (1.0 / t) * (heisenberg_evolve(sys, s0, t) - s0);
}

HermitianOperator mean_ep_quadrature(const QuantumSystem& sys, double t, double tol) {
  require_positive_time(t, "mean_ep_quadrature");
  const Matrix sigma = entropy_production_observable(sys).matrix();
  auto integrand = [&](double s) -> Matrix { return heisenberg_evolve(sys, sigma, s); };
  Matrix integral = adaptive_simpson(integrand, 0.0, t, tol);
  return HermitianOperator(Matrix(integral / t));
}

HermitianOperator mean_ep_observable(const QuantumSystem& sys, double t) {
  constexpr double kAgreement = 1e-8;
  HermitianOperator exact = mean_ep_exact(sys, t);
  const HermitianOperator averaged = mean_ep_quadrature(sys, t);
  const double residual = frobenius(exact.matrix() - averaged.matrix());
  if (residual > kAgreement) throw InvariantViolation("mean_ep_observable quadrature agreement", residual, kAgreement);
  return exact;
}

double mean_entropy_production(const QuantumSystem& sys, double t) {
  return sys.reference_state().expectation(mean_ep_exact(sys, t).matrix()).real();
}

}  // namespace entropic::quantum
