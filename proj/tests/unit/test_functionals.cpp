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
#include <numbers>

#include <gtest/gtest.h>

#include "entropic/errors.hpp"
#include "entropic/functionals.hpp"
#include "entropic/models.hpp"
#include "oracles.hpp"

namespace entropic::quantum {
namespace {

using testing::Gen;

const double kHalfPi = std::numbers::pi / 2;

QuantumSystem qubit() {
  Matrix sx(2, 2);
  sx << 0, 1, 1, 0;
  return QuantumSystem(HermitianOperator::checked(sx), DensityMatrix::diagonal((RealVector(2) << 0.75, 0.25).finished()),
                       true);
}

double oracle(const QuantumSystem& sys, Exponent p, double a, double t) {
  return testing::quantum_functional(sys.hamiltonian().matrix(), sys.reference_state().matrix(),
                                     p.is_infinite() ? testing::kInf : p.value(), a, t);
}

TEST(Exponent, OrderingAndText) {
  EXPECT_THROW(Exponent::finite(0.5), DomainError);
  EXPECT_THROW(Exponent::infinity().value(), DomainError);
  EXPECT_EQ(Exponent::infinity().to_string(), "inf");
  EXPECT_EQ(Exponent::finite(1.5).to_string(), "1.5");
  EXPECT_LT(Exponent::finite(64), Exponent::infinity());
  EXPECT_FALSE(Exponent::infinity() < Exponent::infinity());
  const auto grid = default_p_grid();
  ASSERT_EQ(grid.size(), 8u);
  EXPECT_TRUE(grid.back().is_infinite());
}

TEST(AlphaGrid, DefaultHas61Points) {
  const auto g = alpha_grid();
  ASSERT_EQ(g.size(), 61u);
  EXPECT_DOUBLE_EQ(g.front(), -1.0);
  EXPECT_NEAR(g[30], 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(g.back(), 2.0);
}

TEST(Functional, QubitClosedForm) {
  EXPECT_NEAR(functional(qubit(), Exponent::finite(2), 0.5, kHalfPi), std::log(std::sqrt(3.0) / 2), 1e-14);
}

TEST(Functional, MatchesOracleOnRandomSystems) {
  Gen gen(2024);
  for (int trial = 0; trial < 16; ++trial) {
    const int n = gen.integer(2, 6);
    const bool real = trial % 2 == 0;
    const QuantumSystem sys(HermitianOperator::checked(gen.hermitian(n, real)), DensityMatrix(gen.density(n, real)),
                            real);
    const double t = gen.uniform(0.2, 2.5);
    const FunctionalEvaluator e(sys, t);
    for (const auto& p : {Exponent::finite(1), Exponent::finite(1.5), Exponent::finite(2), Exponent::finite(3.7),
                          Exponent::infinity()}) {
      for (double a : {-1.0, -0.2, 0.3, 0.5, 0.9, 1.6}) {
        EXPECT_NEAR(e(p, a), oracle(sys, p, a, t), 1e-9) << "p=" << p.to_string() << " alpha=" << a;
      }
    }
  }
}

class SeededTri : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SeededTri, SymmetryKawasakiConvexityMonotonicity) {
  const auto sys = models::random_system(2 + static_cast<int>(GetParam() % 7), true, GetParam());
  const auto alphas = alpha_grid();
  const auto ps = default_p_grid();
  for (double t : {0.5, 1.0, kHalfPi}) {
    const FunctionalEvaluator e(sys, t);
    std::vector<std::vector<double>> curves;
    for (const auto& p : ps) {
      std::vector<double> v;
      for (double a : alphas) v.push_back(e(p, a));
      for (std::size_t i = 0; i < v.size(); ++i) ASSERT_NEAR(v[i], v[v.size() - 1 - i], 1e-10);
      ASSERT_NEAR(e(p, 0.0), 0.0, 1e-10);
      ASSERT_NEAR(e(p, 1.0), 0.0, 1e-10);
      for (std::size_t i = 1; i + 1 < v.size(); ++i) ASSERT_GE(v[i + 1] - 2 * v[i] + v[i - 1], -1e-9);
      curves.push_back(std::move(v));
    }
    for (std::size_t k = 0; k + 1 < curves.size(); ++k) {
      for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (alphas[i] > 0.0 && alphas[i] < 1.0) {
          ASSERT_LE(curves[k + 1][i], curves[k][i] + 1e-10);
        }
      }
    }
    for (std::size_t i = 0; i < alphas.size(); ++i) ASSERT_LT(std::abs(curves[6][i] - curves[7][i]), 1e-3);
  }
}

INSTANTIATE_TEST_SUITE_P(Functional, SeededTri, ::testing::Range<std::uint64_t>(0, 12));

TEST(Functional, DerivativeAtZeroIsMinusMeanEntropyProduction) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto sys = models::random_system(3 + static_cast<int>(seed % 4), seed % 2 == 0, 50 + seed);
    for (double t : {0.5, 1.0, 3.0}) {
      const FunctionalEvaluator e(sys, t);
      const double expected = -t * mean_entropy_production(sys, t);
      for (const auto& p : default_p_grid()) {
        const double fd = (e(p, 1e-4) - e(p, -1e-4)) / 2e-4;
        EXPECT_NEAR(fd, expected, 1e-6) << p.to_string();
      }
    }
  }
}

TEST(Functional, CommutingSystemCollapsesToZero) {
  const auto h = HermitianOperator::diagonal((RealVector(3) << 0.0, 1.0, 2.5).finished());
  const QuantumSystem sys(h, DensityMatrix::diagonal((RealVector(3) << 0.2, 0.3, 0.5).finished()), true);
  for (const auto& p : default_p_grid()) {
    for (double a : alpha_grid()) EXPECT_NEAR(functional(sys, p, a, 1.3), 0.0, 1e-12);
  }
}

TEST(Functional, NonTriSystemsSatisfyReflectedTimeSymmetry) {
  // e_{p,t}(alpha) = e_{p,-t}(1 - alpha) for every system.
  const auto sys = models::random_system(4, false, 3);
  for (double a : {-0.5, 0.2, 1.3}) {
    EXPECT_NEAR(functional(sys, Exponent::finite(3), a, 0.8), functional(sys, Exponent::finite(3), 1 - a, -0.8),
                1e-10);
  }
  EXPECT_GT(std::abs(functional(sys, Exponent::finite(2), 0.2, 1.0) - functional(sys, Exponent::finite(2), 0.8, 1.0)),
            1e-6);
}

TEST(Bridges, RenyiRelativeEntropy) {
  Gen gen(6);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const bool tri = seed % 2 == 0;
    const auto sys = models::random_system(2 + static_cast<int>(seed % 5), tri, 400 + seed);
    const double t = gen.uniform(0.3, 2.0);
    const auto wt = schrodinger_evolve(sys, sys.reference_state(), t);
    for (double a : {-0.7, 0.25, 0.5, 1.9}) {
      const auto check = renyi_bridge_check(sys, a, t);
      EXPECT_LT(check.residual, 1e-10);
      const double s = testing::renyi(wt.matrix(), sys.reference_state().matrix(), a);
      EXPECT_NEAR(functional(sys, Exponent::finite(2), tri ? a : 1.0 - a, t), s, 1e-10);
    }
  }
}

TEST(Bridges, NaiveFunctionalBreaksKawasaki) {
  int broken = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto sys = models::random_system(2 + static_cast<int>(seed % 5), true, 700 + seed);
    EXPECT_NEAR(naive_functional(sys, 0.0, 1.0), 0.0, 1e-12);
    if (std::abs(naive_functional(sys, 1.0, 1.0)) > 1e-8) ++broken;
  }
  EXPECT_GE(broken, 19);
}

TEST(Bridges, VariationalMaximum) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto sys = models::random_system(3 + static_cast<int>(seed % 3), seed % 2 == 1, 800 + seed);
    for (double a : {-0.5, 0.3, 0.5, 1.5}) {
      const auto v = variational_max(sys, a, 1.0);
      EXPECT_LT(v.functional_residual, 1e-10);
      EXPECT_LE(v.best_perturbed, v.closed_form + 1e-9);
      const auto rho = DensityMatrix::maximally_mixed(sys.dim());
      EXPECT_LE(variational_objective(sys, rho, a, 1.0), v.value + 1e-12);
    }
  }
}

TEST(ArakiMasuda, DiagonalExampleAndUnitNorm) {
  const auto sys = qubit();
  const Matrix a = (Matrix(2, 2) << 2, 0, 0, 0).finished();
  EXPECT_NEAR(araki_masuda_norm(a, sys, 2.0), std::sqrt(3.0), 1e-14);
  for (double p : {1.0, 1.7, 4.0}) EXPECT_NEAR(araki_masuda_norm(Matrix::Identity(2, 2), sys, p), 1.0, 1e-14);
  EXPECT_THROW(araki_masuda_norm(a, sys, 0.9), DomainError);
}

TEST(Transfer, MatchesFunctional) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const bool tri = seed % 2 == 0;
    const auto sys = models::random_system(2 + static_cast<int>(seed % 4), tri, 500 + seed);
    for (double p : {1.0, 2.0, 3.5}) {
      for (double a : {-0.6, 0.4, 0.5, 1.8}) {
        const auto c = transfer_functional(sys, p, a, 0.9);
        EXPECT_LT(c.residual, 1e-10);
        EXPECT_DOUBLE_EQ(c.reference_alpha, tri ? a : 1.0 - a);
      }
    }
  }
  EXPECT_THROW(transfer_functional(qubit(), 2.0, 0.0, 1.0), DomainError);
}

TEST(Transfer, IsIsometric) {
  Gen gen(31);
  const auto sys = models::random_system(4, false, 13);
  const Matrix a = gen.hermitian(4, false) + Complex(0, 1) * gen.hermitian(4, false);
  for (double p : {1.0, 2.0, 5.0}) {
    EXPECT_NEAR(araki_masuda_norm(transfer_apply(sys, p, a, 0.7), sys, p), araki_masuda_norm(a, sys, p), 1e-10);
  }
}

}  // namespace
}  // namespace entropic::quantum
