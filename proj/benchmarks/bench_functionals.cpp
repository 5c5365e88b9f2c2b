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

#include <benchmark/benchmark.h>

#include "entropic/classical.hpp"
#include "entropic/fcs.hpp"
#include "entropic/functionals.hpp"
#include "entropic/models.hpp"

namespace {

using namespace entropic;

void BM_FunctionalCurve(benchmark::State& state) {
  const auto sys = models::random_system(static_cast<int>(state.range(0)), true, 7);
  const auto alphas = quantum::alpha_grid();
  const auto p = state.range(1) == 0 ? quantum::Exponent::infinity() : quantum::Exponent::finite(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quantum::functional_curve(sys, p, 1.0, alphas));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(alphas.size()));
}
BENCHMARK(BM_FunctionalCurve)->ArgsProduct({{2, 4, 8, 16, 32}, {2, 0}});

void BM_EvaluatorSetup(benchmark::State& state) {
  const auto sys = models::random_system(static_cast<int>(state.range(0)), true, 7);
  for (auto _ : state) benchmark::DoNotOptimize(quantum::FunctionalEvaluator(sys, 1.0));
}
BENCHMARK(BM_EvaluatorSetup)->RangeMultiplier(2)->Range(2, 32);

void BM_FcsModularIdentity(benchmark::State& state) {
  const auto sys = models::random_system(static_cast<int>(state.range(0)), true, 11);
  for (auto _ : state) benchmark::DoNotOptimize(quantum::fcs_modular_identity(sys, 1.0));
}
BENCHMARK(BM_FcsModularIdentity)->RangeMultiplier(2)->Range(2, 16);

void BM_MeanEpQuadrature(benchmark::State& state) {
  const auto sys = models::random_system(static_cast<int>(state.range(0)), true, 13);
  for (auto _ : state) benchmark::DoNotOptimize(quantum::mean_ep_quadrature(sys, 1.0));
}
BENCHMARK(BM_MeanEpQuadrature)->RangeMultiplier(2)->Range(2, 16);

void BM_ClassicalFunctional(benchmark::State& state) {
  const auto sys = models::random_classical_system(static_cast<int>(state.range(0)), true, 17);
  for (auto _ : state) benchmark::DoNotOptimize(classical::functional(sys, 0.3, 3));
}
BENCHMARK(BM_ClassicalFunctional)->RangeMultiplier(4)->Range(4, 4096);

}  // namespace

BENCHMARK_MAIN();
