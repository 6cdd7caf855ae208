// Copyright 2026 The ykdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "ykdist/mathkit.hpp"
#include "ykdist/privacy_amplification.hpp"
#include "ykdist/reconciliation.hpp"
#include "ykdist/session.hpp"

namespace {

using namespace ykdist;

void BM_QFunction(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_function(x));
    x = x > 8.0 ? -8.0 : x + 0.01;
  }
}
BENCHMARK(BM_QFunction);

void BM_QInverse(benchmark::State& state) {
  double p = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_inverse(p));
    p = p > 0.99 ? 1e-6 : p * 1.01;
  }
}
BENCHMARK(BM_QInverse);

void BM_Session(benchmark::State& state) {
  const auto bob = SignalParams::from_snr(SnrValue::from_db(0.0));
  const SessionConfig cfg{static_cast<std::size_t>(state.range(0)), tap_input_for(bob, 0.5),
                          ThresholdPolicy(2.0), AttackConfig::translucent(0.5),
                          AlicePattern::Random, std::nullopt};
  SeededRng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(run_session(cfg, rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Session)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_Cascade(benchmark::State& state) {
  const double e = static_cast<double>(state.range(1)) / 1000.0;
  SeededRng rng(2);
  const auto alice = BitString::random(static_cast<std::size_t>(state.range(0)), rng);
  BitString bob = alice;
  for (std::size_t i = 0; i < bob.size(); ++i) {
    if (rng.bernoulli(e)) bob.flip(i);
  }
  for (auto _ : state) {
    PublicChannel log;
    benchmark::DoNotOptimize(error_correct(alice, bob, e, log, rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Cascade)->Args({10'000, 10})->Args({10'000, 120})->Args({160'000, 8})
    ->Unit(benchmark::kMillisecond);

void BM_Toeplitz(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SeededRng rng(3);
  const AmplificationParams params{0.5, n, 0, 0};
  const auto key = BitString::random(n, rng);
  const auto seed = toeplitz_seed(params, rng);
  for (auto _ : state) benchmark::DoNotOptimize(privacy_amplify(key, params, seed));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Toeplitz)->Arg(10'000)->Arg(160'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
