/* Copyright (C) 2026 The ssred Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include <benchmark/benchmark.h>

#include "ssred/appendix.hpp"
#include "ssred/classifier.hpp"
#include "ssred/hecke_sampler.hpp"
#include "ssred/identities.hpp"
#include "ssred/linalg.hpp"
#include "ssred/padiclog.hpp"
#include "ssred/wz.hpp"

using namespace ssred;

static void BM_AppendixSolve(benchmark::State& state) {
  long r = state.range(0);
  AppendixSystem sys = build_system(AppendixId::B11, r);
  for (auto _ : state) benchmark::DoNotOptimize(solve_affine(sys));
  state.SetLabel("B11 r=" + std::to_string(r));
}
BENCHMARK(BM_AppendixSolve)->Arg(11)->Arg(51)->Arg(99)->Unit(benchmark::kMillisecond);

static void BM_HilbertSolve(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  RatMatrix h(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = Rational(1) / Rational(static_cast<long>(i + j + 1));
  RatMatrix id = identity_matrix(n);
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(h, id));
}
BENCHMARK(BM_HilbertSolve)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_Canonicalize(benchmark::State& state) {
  long p = state.range(0);
  HeckeSampler rng(1);
  std::vector<GroupElt> gs;
  for (int i = 0; i < 256; ++i) gs.push_back(rng.element(p, 3) * rng.iwahori(p));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(gs[i++ % gs.size()], p));
}
BENCHMARK(BM_Canonicalize)->Arg(5)->Arg(13);

static void BM_HeckeRelations(benchmark::State& state) {
  long p = state.range(0);
  HeckeSampler rng(2);
  std::vector<std::pair<ModPVec, GroupElt>> cases;
  for (int i = 0; i < 64; ++i) {
    Weight w = Weight::character(rng.below(p - 1), rng.below(p - 1));
    ModPVec v = rng.mod_p_vec(p, w);
    cases.emplace_back(v, rng.element(p, 2) * rng.iwahori(p));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [v, g] = cases[i++ % cases.size()];
    benchmark::DoNotOptimize(check_hecke_relations(v, g));
  }
}
BENCHMARK(BM_HeckeRelations)->Arg(5)->Arg(7)->Unit(benchmark::kMicrosecond);

static void BM_Classify(benchmark::State& state) {
  long p = state.range(0);
  std::vector<ClassifierInput> inputs;
  for (long k = 3; k <= p + 1; ++k)
    for (long t = -2 * (k - 2); t <= 4; ++t)
      inputs.push_back({p, k, QuadElt::sqrt_p_power(p, t) + shift_constant(k - 2)});
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_Classify)->Arg(5)->Arg(13);

static void BM_LogEval(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  QuadElt L(7, 3, 1);
  long x = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_L_eval(Rational(x) / Rational(x + 7), L, N));
    x = x % 1000 + 1;
  }
}
BENCHMARK(BM_LogEval)->Arg(8)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_IdentityBatch(benchmark::State& state) {
  long bound = state.range(0);
  for (auto _ : state)
    for (IdentityName id : {IdentityName::MAIN17, IdentityName::TRICKY10, IdentityName::MAIN16})
      for (long q : identity_batch(id, bound)) benchmark::DoNotOptimize(verify_identity({id, q}));
}
BENCHMARK(BM_IdentityBatch)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_WZCheck(benchmark::State& state) {
  long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(wz_certificate_check(n, {0, 1, 2, 3, 4, 5}));
}
BENCHMARK(BM_WZCheck)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
