// Copyright 2026 The skeltrop Authors.
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

#include <random>

#include "skeltrop/lattice.hpp"
#include "skeltrop/mumford.hpp"
#include "skeltrop/pl_function.hpp"
#include "skeltrop/polyhedron.hpp"

using namespace skeltrop;

namespace {

IntMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-20, 20);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(6)->Arg(10);

void BM_HermiteNormalForm(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(3)->Arg(6)->Arg(10);

// Cube [0,1]^n cut by the hyperplanes x_i + x_j <= 3/2.
Polyhedron cut_cube(std::size_t n) {
  std::vector<Constraint> ineqs;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector lo(n), hi(n);
    lo[i] = 1;
    hi[i] = -1;
    ineqs.push_back({lo, Rat(0)});
    ineqs.push_back({hi, Rat(1)});
    for (std::size_t j = i + 1; j < n; ++j) {
      IntVector u(n);
      u[i] = -1;
      u[j] = -1;
      ineqs.push_back({u, Rat(3, 2)});
    }
  }
  return Polyhedron(n, ineqs);
}

void BM_VertexEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const Polyhedron p = cut_cube(n);
    benchmark::DoNotOptimize(p.vrep());
  }
}
BENCHMARK(BM_VertexEnumeration)->DenseRange(2, 4);

void BM_KolbTable(benchmark::State& state) {
  const TorusTriangulation t = refine(build_C(), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(KolbEngine(t));
}
BENCHMARK(BM_KolbTable)->Arg(2)->Arg(3)->Arg(4);

void BM_AlphaTable(benchmark::State& state) {
  const TorusTriangulation c = build_C();
  const TorusTriangulation fine = refine(c, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alpha_table(c, fine));
}
BENCHMARK(BM_AlphaTable)->Arg(2)->Arg(3);

void BM_E2BoundedBalance(benchmark::State& state) {
  const TorusTriangulation c = build_C();
  const E2Pair pair = build_e2_pair(c, refine(c, 2));
  for (auto _ : state) benchmark::DoNotOptimize(check_bounded_formula(pair.complex, pair.function));
}
BENCHMARK(BM_E2BoundedBalance);

}  // namespace

BENCHMARK_MAIN();
