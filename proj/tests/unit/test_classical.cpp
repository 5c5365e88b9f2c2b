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

#include <gtest/gtest.h>

#include "entropic/classical.hpp"
#include "entropic/errors.hpp"
#include "entropic/models.hpp"
#include "oracles.hpp"

namespace entropic::classical {
namespace {

using testing::Gen;

const double kLog2 = std::log(2.0);

ClassicalSystem ring3() { return ClassicalSystem(ClassicalState((RealVector(3) << 0.25, 0.5, 0.25).finished())); }

ClassicalSystem random_system(Gen& gen, int n) { return ClassicalSystem(ClassicalState(gen.probabilities(n))); }

TEST(ClassicalState, Validation) {
  EXPECT_THROW(ClassicalState((RealVector(2) << 0.5, 0.6).finished()), DomainError);
  EXPECT_THROW(ClassicalState((RealVector(2) << 1.0, 0.0).finished()), DomainError);
  EXPECT_NO_THROW(ClassicalState::normalized((RealVector(3) << 1, 2, 3).finished()));
  EXPECT_DOUBLE_EQ(ClassicalState::uniform(4)(3), 0.25);
}

TEST(Evolution, ShiftConventions) {
  const auto sys = ring3();
  const auto rho1 = evolve_state(sys, sys.reference_state(), 1);
  EXPECT_DOUBLE_EQ(rho1(0), 0.25);
  EXPECT_DOUBLE_EQ(rho1(1), 0.25);
  EXPECT_DOUBLE_EQ(rho1(2), 0.5);
  const ClassicalObservable f((RealVector(3) << 1, 2, 3).finished());
  EXPECT_DOUBLE_EQ(evolve_observable(sys, f, 1)(2), 1.0);
  EXPECT_DOUBLE_EQ(evolve_observable(sys, f, -1)(0), 3.0);
  // rho_t(f) = rho(f_t)
  EXPECT_NEAR(rho1.expectation(f), sys.reference_state().expectation(evolve_observable(sys, f, 1)), 1e-15);
}

TEST(RelativeEntropy, FrozenValues) {
  const ClassicalState rho((RealVector(2) << 0.5, 0.5).finished());
  const ClassicalState nu((RealVector(2) << 0.25, 0.75).finished());
  EXPECT_NEAR(relative_entropy(rho, nu), 0.5 * std::log(0.75), 1e-15);
  EXPECT_NEAR(renyi_entropy(rho, nu, 0.5), std::log(std::sqrt(1.0 / 8) + std::sqrt(3.0 / 8)), 1e-15);
}

TEST(EntropyProduction, RingOfThree) {
  const auto sys = ring3();
  const auto sigma = mean_ep_observable(sys, 1);
  EXPECT_NEAR(sigma(0), -kLog2, 1e-15);
  EXPECT_NEAR(sigma(1), kLog2, 1e-15);
  EXPECT_NEAR(sigma(2), 0.0, 1e-15);
  const auto es = es_distribution(sys, 1);
  ASSERT_EQ(es.size(), 3u);
  EXPECT_NEAR(es.weight_at(-kLog2), 0.25, 1e-15);
  EXPECT_NEAR(es.weight_at(0.0), 0.25, 1e-15);
  EXPECT_NEAR(es.weight_at(kLog2), 0.5, 1e-15);
  EXPECT_LT(fluctuation_relation_residual(es, 1.0), 1e-15);
}

TEST(Functional, RingOfThreeAtOneHalf) {
  EXPECT_NEAR(functional(ring3(), 0.5, 1), std::log(0.25 + std::sqrt(2.0) / 2), 1e-15);
}

TEST(Functional, MatchesOracleOnRandomSystems) {
  Gen gen(42);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = gen.integer(2, 101);
    const auto sys = random_system(gen, n);
    const std::int64_t t = gen.integer(1, 2 * n);
    const double a = gen.uniform(-1.0, 2.0);
    EXPECT_NEAR(functional(sys, a, t), testing::classical_functional(sys.reference_state().probabilities(), a, t),
                1e-12);
    const auto sigma = mean_ep_observable(sys, t);
    const auto ref = testing::classical_mean_ep(sys.reference_state().probabilities(), t);
    EXPECT_LT((sigma.values() - ref).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Functional, SymmetryHoldsExactlyForTriSystems) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 3 + static_cast<int>((seed * 13) % 99);
    const auto sys = models::random_classical_system(n, true, seed);
    ASSERT_TRUE(sys.is_tri());
    for (std::int64_t t : {1, 2, 5}) {
      for (double a = -1.0; a <= 2.0 + 1e-9; a += 0.25) {
        EXPECT_NEAR(functional(sys, a, t), functional(sys, 1.0 - a, t), 1e-10);
      }
    }
  }
}

TEST(Functional, SymmetryFailsWithoutTri) {
  const auto sys = models::random_classical_system(9, false, 5);
  ASSERT_FALSE(sys.is_tri());
  EXPECT_GT(std::abs(functional(sys, 0.2, 1) - functional(sys, 0.8, 1)), 1e-6);
}

TEST(Functional, KawasakiConvexityAndDerivative) {
  Gen gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto sys = random_system(gen, gen.integer(3, 40));
    const std::int64_t t = gen.integer(1, 6);
    EXPECT_EQ(functional(sys, 0.0, t), 0.0);
    EXPECT_NEAR(functional(sys, 1.0, t), 0.0, 1e-12);
    for (double a = -0.95; a < 2.0; a += 0.05) {
      const double d2 = functional(sys, a + 0.05, t) - 2.0 * functional(sys, a, t) + functional(sys, a - 0.05, t);
      EXPECT_GE(d2, -1e-9);
    }
    const double h = 1e-4;
    const double fd = (functional(sys, h, t) - functional(sys, -h, t)) / (2 * h);
    const double mean = sys.reference_state().expectation(mean_ep_observable(sys, t));
    EXPECT_NEAR(fd, -static_cast<double>(t) * mean, 1e-6);
    EXPECT_GE(mean, -1e-12);
  }
}

TEST(Functional, ThreeAlternativeFormulas) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto sys = models::random_classical_system(3 + static_cast<int>(seed * 5), true, 900 + seed);
    for (std::int64_t t : {1, 3}) {
      for (double a : {-1.0, -0.3, 0.4, 0.5, 1.7, 2.0}) {
        const double e = functional(sys, a, t);
        const auto v = variational_functional(sys, a, t);
        EXPECT_NEAR(v.value, e, 1e-12);
        EXPECT_LE(v.best_perturbed, v.value + 1e-10);
        EXPECT_NEAR(renyi_identity_check(sys, a, t).reference, e, 1e-12);
        for (double p : {1.0, 2.0, 4.5}) EXPECT_NEAR(transfer_functional(sys, p, a, t), e, 1e-12);
      }
    }
  }
}

TEST(Functional, TransferGivesReflectedAlphaWithoutTri) {
  const auto sys = models::random_classical_system(8, false, 12);
  for (double a : {-0.5, 0.3, 1.4}) EXPECT_NEAR(transfer_functional(sys, 2.0, a, 2), functional(sys, 1.0 - a, 2), 1e-12);
}

TEST(Transfer, IsometryAndIntertwining) {
  Gen gen(99);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = gen.integer(3, 20);
    const auto sys = random_system(gen, n);
    RealVector fv(n), gv(n);
    for (int j = 0; j < n; ++j) {
      fv(j) = gen.normal();
      gv(j) = gen.normal();
    }
    const ClassicalObservable f(fv), g(gv);
    const double p = gen.uniform(1.0, 5.0);
    const std::int64_t t = gen.integer(1, 5);
    EXPECT_NEAR(lp_norm(sys, transfer_apply(sys, p, f, t), p), lp_norm(sys, f, p), 1e-12);
    const auto lhs = transfer_apply(sys, p, f * transfer_apply(sys, p, g, t), -t);
    const auto rhs = evolve_observable(sys, f, t) * g;
    EXPECT_LT((lhs.values() - rhs.values()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Errors, DomainChecks) {
  const auto sys = ring3();
  EXPECT_THROW(functional(sys, 0.5, 0), DomainError);
  EXPECT_THROW(mean_ep_observable(sys, -1), DomainError);
  EXPECT_THROW(transfer_functional(sys, 2.0, 0.0, 1), DomainError);
  EXPECT_THROW(transfer_functional(sys, 0.5, 0.3, 1), DomainError);
  EXPECT_THROW(variational_functional(sys, 0.5, 1, 5), DomainError);
  EXPECT_THROW(evolve_observable(sys, ClassicalObservable::constant(4, 1.0), 1), DimensionError);
}

}  // namespace
}  // namespace entropic::classical
