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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "entropic/errors.hpp"
#include "entropic/models.hpp"

namespace entropic::models {
namespace {

TEST(Canonical, Structure) {
  const auto m = canonical_two_qubit_model();
  EXPECT_EQ(m.dim_left(), 2);
  EXPECT_EQ(m.dim_right(), 2);
  EXPECT_TRUE(m.assembled.is_tri());
  EXPECT_DOUBLE_EQ(m.beta_left, 1.0);
  EXPECT_DOUBLE_EQ(m.beta_right, 2.0);
  EXPECT_NEAR(m.z_left, 1.0 + std::exp(-1.0), 1e-15);
  EXPECT_NEAR(m.z_right, 1.0 + std::exp(-2.0), 1e-15);
  // H = diag(0,1,1,2) + 0.25 sx (x) sx; the coupling links |00>-|11> and |01>-|10>.
  const Matrix& h = m.assembled.hamiltonian().matrix();
  EXPECT_NEAR(h(3, 3).real(), 2.0, 1e-15);
  EXPECT_NEAR(h(0, 3).real(), 0.25, 1e-15);
  EXPECT_NEAR(h(1, 2).real(), 0.25, 1e-15);
  EXPECT_NEAR(std::abs(h(0, 1)), 0.0, 1e-15);
  // omega_0 = omega_l (x) omega_r
  const Matrix& w = m.assembled.reference_state().matrix();
  EXPECT_NEAR(w(1, 1).real(), 1.0 / (m.z_left * m.z_right) * std::exp(-2.0), 1e-15);
  EXPECT_NEAR(w(2, 2).real(), 1.0 / (m.z_left * m.z_right) * std::exp(-1.0), 1e-15);
}

TEST(Canonical, FluxBalance) {
  const auto m = canonical_two_qubit_model();
  for (double t : {0.5, 1.0, 2.0}) {
    EXPECT_LT(flux_balance_residual(m, Side::kLeft, t), 1e-8);
    EXPECT_LT(flux_balance_residual(m, Side::kRight, t), 1e-8);
  }
}

TEST(Canonical, HeatFlowsBetweenDifferentTemperatures) {
  const auto m = canonical_two_qubit_model();
  EXPECT_GT(quantum::mean_entropy_production(m.assembled, 1.0), 1e-10);
  const auto equal = canonical_two_qubit_model(0.25, 1.5, 1.5);
  // equal temperatures: omega_0 is not a function of H, but EP still obeys the second law
  EXPECT_GE(quantum::mean_entropy_production(equal.assembled, 1.0), -1e-12);
}

TEST(Decomposition, MatchesCommutatorForm) {
  const auto m = canonical_two_qubit_model();
  const auto sigma = entropy_production_decomposition(m);
  EXPECT_LT(frobenius(sigma.matrix() - quantum::entropy_production_observable(m.assembled).matrix()), 1e-10);
  const auto f = flux_observables(m);
  // Phi_l + Phi_r = i[H, V]
  EXPECT_LT(frobenius(f.left.matrix() + f.right.matrix() -
                      Complex(0, 1) * commutator(m.assembled.hamiltonian().matrix(), m.coupling.matrix())),
            1e-12);
}

TEST(Decomposition, SeededGeneralModels) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int k = 0; k < 10; ++k) {
    const Index dl = 2 + k % 2, dr = 2 + (k / 2) % 2;
    auto herm = [&](Index n, bool real) {
      Matrix a(n, n);
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) a(i, j) = Complex(g(rng), real ? 0.0 : g(rng));
      }
      return HermitianOperator(Matrix(0.5 * (a + a.adjoint())));
    };
    const bool real = k % 3 != 0;
    const auto m = build_two_reservoir(herm(dl, real), herm(dr, real), 0.5 + 0.2 * k, 2.5 - 0.15 * k,
                                       0.2 * herm(dl * dr, real));
    EXPECT_EQ(m.assembled.is_tri(), real);
    EXPECT_NO_THROW(entropy_production_decomposition(m));
    EXPECT_LT(flux_balance_residual(m, Side::kLeft, 1.0), 1e-8);
  }
}

TEST(Build, Errors) {
  const auto h = HermitianOperator::diagonal((RealVector(2) << 0.0, 1.0).finished());
  EXPECT_THROW(build_two_reservoir(h, h, 0.0, 1.0, HermitianOperator::zero(4)), DomainError);
  EXPECT_THROW(build_two_reservoir(h, h, 1.0, -2.0, HermitianOperator::zero(4)), DomainError);
  EXPECT_THROW(build_two_reservoir(h, h, 1.0, 2.0, HermitianOperator::zero(3)), DimensionError);
}

TEST(Random, SeededAndNonCommuting) {
  const auto a = random_system(5, true, 17);
  const auto b = random_system(5, true, 17);
  EXPECT_EQ(a.hamiltonian().matrix(), b.hamiltonian().matrix());
  EXPECT_GE(a.commutator_norm(), 1e-6);
  EXPECT_TRUE(a.hamiltonian().is_real());
  EXPECT_FALSE(random_system(3, false, 1).hamiltonian().is_real());
  EXPECT_THROW(random_system(1, true, 0), DomainError);
}

TEST(Random, ClassicalPalindromeWhenTri) {
  for (int n : {3, 4, 11, 50}) {
    EXPECT_TRUE(random_classical_system(n, true, 8).is_tri());
    EXPECT_FALSE(random_classical_system(n, false, 8).is_tri());
  }
}

}  // namespace
}  // namespace entropic::models
