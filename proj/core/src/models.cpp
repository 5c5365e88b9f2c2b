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

#include "entropic/models.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "entropic/errors.hpp"
#include "entropic/quadrature.hpp"

namespace entropic::models {

namespace {

quantum::DensityMatrix gibbs_state(const HermitianOperator& h, double beta, double& z) {
  const auto s = eig(h);
  // Z computed spectrally, shifted by the ground energy to avoid overflow
  const double e0 = s.min();
  z = std::exp(-beta * e0) * (-beta * (s.eigenvalues.array() - e0)).exp().sum();
  return quantum::DensityMatrix::gibbs(beta * h);
}

Matrix gaussian_hermitian(Index n, bool real, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      const double re = g(rng);
      const double im = real ? 0.0 : g(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return (m + m.adjoint()) / (2.0 * std::sqrt(static_cast<double>(n)));
}

}  // namespace

HermitianOperator ReservoirModel::left_on_product() const {
  return HermitianOperator(kron(h_left.matrix(), Matrix::Identity(dim_right(), dim_right())));
}

HermitianOperator ReservoirModel::right_on_product() const {
  return HermitianOperator(kron(Matrix::Identity(dim_left(), dim_left()), h_right.matrix()));
}

ReservoirModel build_two_reservoir(const HermitianOperator& h_left, const HermitianOperator& h_right,
                                   double beta_left, double beta_right, const HermitianOperator& coupling) {
  if (!(beta_left > 0.0) || !(beta_right > 0.0)) {
    std::ostringstream os;
    os << "inverse temperatures must be > 0, got beta_l=" << beta_left << " beta_r=" << beta_right;
    throw DomainError(os.str());
  }
  const Index n = h_left.dim() * h_right.dim();
  if (coupling.dim() != n) {
    std::ostringstream os;
    os << "coupling has dimension " << coupling.dim() << ", product space has " << n;
    throw DimensionError(os.str());
  }

  double z_left = 0.0;
  double z_right = 0.0;
  const auto omega_left = gibbs_state(h_left, beta_left, z_left);
  const auto omega_right = gibbs_state(h_right, beta_right, z_right);

  const Matrix id_l = Matrix::Identity(h_left.dim(), h_left.dim());
  const Matrix id_r = Matrix::Identity(h_right.dim(), h_right.dim());
  HermitianOperator h(Matrix(kron(h_left.matrix(), id_r) + kron(id_l, h_right.matrix()) + coupling.matrix()));
  // Gibbs state of beta_l H_l + beta_r H_r rather than the re-diagonalized
  // product omega_l (x) omega_r: log omega_0 then inherits the accuracy of the
  // generator instead of picking up 1/lambda_min from near-degenerate clusters.
  const auto omega = quantum::DensityMatrix::gibbs(
      HermitianOperator(Matrix(beta_left * kron(h_left.matrix(), id_r) + beta_right * kron(id_l, h_right.matrix()))));
  const double product_defect = frobenius(omega.matrix() - kron(omega_left.matrix(), omega_right.matrix()));
  if (product_defect > 1e-12) throw InvariantViolation("omega_0 = omega_l (x) omega_r", product_defect, 1e-12);
  const bool tri = h_left.is_real() && h_right.is_real() && coupling.is_real();

  return ReservoirModel{h_left,  h_right, beta_left, beta_right, coupling,
                        z_left,  z_right, QuantumSystem(std::move(h), std::move(omega), tri)};
}

ReservoirModel canonical_two_qubit_model(double epsilon, double beta_left, double beta_right) {
  const auto h = HermitianOperator::diagonal(RealVector::LinSpaced(2, 0.0, 1.0));
  Matrix sx(2, 2);
  sx << 0.0, 1.0, 1.0, 0.0;
  return build_two_reservoir(h, h, beta_left, beta_right, HermitianOperator(Matrix(epsilon * kron(sx, sx))));
}

Fluxes flux_observables(const ReservoirModel& model) {
  const Complex i(0.0, 1.0);
  const Matrix& v = model.coupling.matrix();
  return Fluxes{HermitianOperator(Matrix(i * commutator(model.left_on_product().matrix(), v))),
                HermitianOperator(Matrix(i * commutator(model.right_on_product().matrix(), v)))};
}

double flux_balance_residual(const ReservoirModel& model, Side side, double t, double tol) {
  const auto fluxes = flux_observables(model);
  const HermitianOperator& phi = side == Side::kLeft ? fluxes.left : fluxes.right;
  const HermitianOperator h = side == Side::kLeft ? model.left_on_product() : model.right_on_product();
  const auto& sys = model.assembled;

  auto integrand = [&](double s) -> Matrix { return quantum::heisenberg_evolve(sys, phi.matrix(), s); };
  const Matrix integral = adaptive_simpson(integrand, 0.0, t, tol);
  const Matrix h_t = quantum::heisenberg_evolve(sys, h.matrix(), t);
  return frobenius(h_t - h.matrix() + integral);
}

HermitianOperator entropy_production_decomposition(const ReservoirModel& model) {
  constexpr double kTol = 1e-10;
  const auto fluxes = flux_observables(model);
  HermitianOperator sigma = -model.beta_left * fluxes.left - model.beta_right * fluxes.right;
  const double residual =
      frobenius(sigma.matrix() - quantum::entropy_production_observable(model.assembled).matrix());
  if (residual > kTol) throw InvariantViolation("sigma = -beta_l Phi_l - beta_r Phi_r", residual, kTol);
  return sigma;
}

QuantumSystem random_system(int dim, bool tri, std::uint64_t seed, double spread) {
  if (dim < 2) throw DomainError("random_system: dim must be >= 2");
  if (!(spread > 0.0)) throw DomainError("random_system: spread must be > 0");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    HermitianOperator h(gaussian_hermitian(dim, tri, rng));
    HermitianOperator r(Matrix(spread * gaussian_hermitian(dim, tri, rng)));
    QuantumSystem sys(std::move(h), quantum::DensityMatrix::gibbs(r), tri);
    if (sys.commutator_norm() >= 1e-6) return sys;
  }
  throw DomainError("random_system: could not draw a non-commuting system in 100 attempts");
}

classical::ClassicalSystem random_classical_system(int size, bool tri, std::uint64_t seed, double spread) {
  if (size < 2) throw DomainError("random_classical_system: size must be >= 2");
  if (!(spread > 0.0)) throw DomainError("random_classical_system: spread must be > 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  RealVector log_w(size);
  for (int j = 0; j < size; ++j) log_w(j) = -spread * g(rng);
  if (tri) {
    for (int j = 0; j < size / 2; ++j) log_w(size - 1 - j) = log_w(j);
  }
  const double hi = log_w.maxCoeff();
  return classical::ClassicalSystem(classical::ClassicalState::normalized((log_w.array() - hi).exp().matrix()));
}

}  // namespace entropic::models
