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
#include "entropic/fcs.hpp"
#include "entropic/functionals.hpp"
#include "entropic/models.hpp"
#include "oracles.hpp"

namespace entropic::quantum {
namespace {

const double kLog3 = std::log(3.0);
const double kHalfPi = std::numbers::pi / 2;

QuantumSystem qubit() {
  Matrix sx(2, 2);
  sx << 0, 1, 1, 0;
  return QuantumSystem(HermitianOperator::checked(sx), DensityMatrix::diagonal((RealVector(2) << 0.75, 0.25).finished()),
                       true);
}

void expect_matches(const SpectralMeasure& mu, const testing::Atoms& reference, double tol) {
  ASSERT_EQ(mu.size(), reference.size());
  for (std::size_t i = 0; i < reference.size(); ++i) {
    EXPECT_NEAR(mu.atoms()[i].value, reference[i].first, 1e-9);
    EXPECT_NEAR(mu.atoms()[i].weight, reference[i].second, tol);
  }
}

TEST(Fcs, QubitClosedForm) {
  const auto p = fcs_distribution(qubit(), kHalfPi);
  ASSERT_EQ(p.size(), 2u);
  const double x = 2.0 / std::numbers::pi * kLog3;
  EXPECT_NEAR(p.atoms()[0].value, -x, 1e-12);
  EXPECT_NEAR(p.atoms()[0].weight, 0.25, 1e-12);
  EXPECT_NEAR(p.atoms()[1].value, x, 1e-12);
  EXPECT_NEAR(p.atoms()[1].weight, 0.75, 1e-12);
  const auto q = modular_spectral_measure(qubit(), kHalfPi);
  EXPECT_LT(total_variation(p, q), 1e-12);
}

TEST(Fcs, MatchesTwoTimeMeasurementOracle) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto sys = models::random_system(2 + static_cast<int>(seed % 5), seed % 2 == 0, 1100 + seed);
    const double t = 0.4 + 0.3 * static_cast<double>(seed);
    const auto h = sys.hamiltonian().matrix();
    const auto w = sys.reference_state().matrix();
    expect_matches(fcs_distribution(sys, t), testing::fcs(h, w, t), 1e-12);
    expect_matches(modular_spectral_measure(sys, t), testing::modular(h, w, t), 1e-11);
  }
}

TEST(Fcs, EqualsModularMeasureUnderTri) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto sys = models::random_system(2 + static_cast<int>(seed % 6), true, 1200 + seed);
    for (double t : {0.5, 1.0, kHalfPi}) {
      const auto id = fcs_modular_identity(sys, t);
      EXPECT_LT(id.tv_distance, 1e-10);
      EXPECT_LT(fluctuation_relation_residual(id.fcs, t), 1e-10);
      for (const auto& a : id.modular.atoms()) EXPECT_GE(a.weight, -1e-14);
    }
  }
  const auto canonical = models::canonical_two_qubit_model().assembled;
  EXPECT_LT(fcs_modular_identity(canonical, 1.0).tv_distance, 1e-10);
}

TEST(Fcs, TiltedReflectionWithoutTri) {
  const auto sys = models::random_system(4, false, 5);
  const auto id = fcs_modular_identity(sys, 1.2);
  EXPECT_LT(id.tilted_tv_distance, 1e-10);
  EXPECT_GT(id.tv_distance, 1e-6);
}

TEST(Fcs, CgfEqualsRenyiFunctional) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto sys = models::random_system(2 + static_cast<int>(seed % 5), seed % 3 != 0, 1300 + seed);
    const double t = 1.0 + 0.25 * static_cast<double>(seed);
    const auto p = fcs_distribution(sys, t);
    const FunctionalEvaluator e(sys, t);
    EXPECT_NEAR(fcs_cgf(p, 0.0, t), 0.0, 1e-14);
    for (double a : alpha_grid()) EXPECT_NEAR(fcs_cgf(p, a, t), e(Exponent::finite(2), a), 1e-10);
    const double fd = (fcs_cgf(p, 1e-4, t) - fcs_cgf(p, -1e-4, t)) / 2e-4;
    EXPECT_NEAR(p.mean(), -fd / t, 1e-6);
    EXPECT_NEAR(p.mean(), mean_entropy_production(sys, t), 1e-10);
  }
}

TEST(Fcs, CommutingSystemHasSingleAtomAtZero) {
  const auto h = HermitianOperator::diagonal((RealVector(3) << 0.0, 1.0, 2.5).finished());
  const QuantumSystem sys(h, DensityMatrix::diagonal((RealVector(3) << 0.2, 0.3, 0.5).finished()), true);
  const auto p = fcs_distribution(sys, 1.0);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_NEAR(p.atoms()[0].value, 0.0, 1e-12);
  EXPECT_NEAR(p.atoms()[0].weight, 1.0, 1e-14);
}

TEST(Fcs, RelativeModularOperatorAction) {
  testing::Gen gen(1);
  const auto sys = models::random_system(3, false, 9);
  const Matrix a = gen.hermitian(3, false);
  const Matrix u = sys.propagator(0.6);
  const Matrix w0 = sys.reference_state().matrix();
  const Matrix expected = u * w0 * u.adjoint() * a * w0.inverse();
  EXPECT_LT((relative_modular_apply(sys, 0.6, a) - expected).norm(), 1e-11);
}

TEST(SpectralResolution, ProjectorsAndDegeneracy) {
  const auto a = HermitianOperator::diagonal((RealVector(4) << 1.0, -2.0, 1.0, 3.0).finished());
  const auto fam = spectral_resolution(a);
  ASSERT_EQ(fam.eigenvalues.size(), 3u);
  EXPECT_DOUBLE_EQ(fam.eigenvalues[1], 1.0);
  EXPECT_NEAR(fam.projectors[1].trace(), 2.0, 1e-14);
  EXPECT_LT(fam.invariant_residual(), 1e-13);
}

TEST(Fcs, RejectsNonPositiveTime) {
  EXPECT_THROW(fcs_distribution(qubit(), 0.0), DomainError);
  EXPECT_THROW(modular_spectral_measure(qubit(), -1.0), DomainError);
}

}  // namespace
}  // namespace entropic::quantum
