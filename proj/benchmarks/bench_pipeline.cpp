// Copyright 2026 The Shellgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "shellgen/dataset.hpp"
#include "shellgen/spline.hpp"

namespace {

using namespace shellgen;

void BM_EvalCurve(benchmark::State& state) {
  const SplineCurve curve = canonical_base_outline().top;
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_curve(curve, t));
    t += 0.37;
    if (t > 1000.0) t -= 1000.0;
  }
}
BENCHMARK(BM_EvalCurve);

void BM_EvalCurveDeBoor(benchmark::State& state) {
  const SplineCurve curve = canonical_base_outline().top;
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_curve_deboor(curve, t));
    t += 0.37;
    if (t > 1000.0) t -= 1000.0;
  }
}
BENCHMARK(BM_EvalCurveDeBoor);

void BM_GenerateShell(benchmark::State& state) {
  ShellParams p;
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    ++p.seed;
    benchmark::DoNotOptimize(stitch_rings(generate_shell(p, samples)));
  }
}
BENCHMARK(BM_GenerateShell)->Arg(16)->Arg(64);

void BM_Rasterize(benchmark::State& state) {
  RunConfig config;
  config.num_shells = 10;
  config.num_scenes = 1;
  config.image_width = config.image_height = static_cast<int>(state.range(0));
  config.focal_length_px = static_cast<double>(state.range(0));
  const Batch batch = generate_batch(config);
  const Camera cam = config.camera();
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(rasterize(batch.scenes[0], cam, workers));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_Rasterize)->Args({256, 1})->Args({256, 4})->Args({1024, 1})->Unit(benchmark::kMillisecond);

void BM_GenerateBatch(benchmark::State& state) {
  RunConfig config;
  config.num_shells = 20;
  config.num_scenes = 2;
  config.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_batch(config));
}
BENCHMARK(BM_GenerateBatch)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
