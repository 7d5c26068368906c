/*
   Copyright 2026 The quantj Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Zeta power sums over a_1 of f^2 = T^2 f + 1: the serial enumeration reference, its
// OpenMP version and the block-sum kernel. The first argument is the requested number of
// coefficients past the leading term, which fixes how many degrees are summed.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "quantj/io.hpp"
#include "quantj/zeta.hpp"

using namespace quantj;

namespace {

FilteredBasis lattice(std::uint32_t q, int bound) {
    const auto in = parse_instance(Json{{"q", q}, {"a", "T^2"}, {"b", "1"}});
    return ideal_filtered_basis(ideal_a(Ambient::of_order(OrderDesc::standard(in.desc)), 1), bound);
}

void run(benchmark::State& state, std::uint32_t q, ZetaKernel kernel) {
    const auto L = lattice(q, q == 2 ? 64 : 40);
    const int n = static_cast<int>(q * q - 1);
    const std::int64_t A = n * L.degree(0) + state.range(0);
    const int threads = state.range(1) > 0 ? static_cast<int>(state.range(1)) : omp_get_max_threads();
    omp_set_num_threads(threads);
    for (auto _ : state) benchmark::DoNotOptimize(sign_one_power_sum(L, n, A, kernel));
    int cutoff = 0;
    sign_one_power_sum(L, n, A, kernel, &cutoff);
    state.counters["degree_cutoff"] = cutoff;
    state.counters["threads"] = threads;
}

void BM_Serial(benchmark::State& s) { run(s, 2, ZetaKernel::EnumerateSerial); }
void BM_Parallel(benchmark::State& s) { run(s, 2, ZetaKernel::EnumerateParallel); }
void BM_Goss(benchmark::State& s) { run(s, 2, ZetaKernel::Goss); }
void BM_Serial3(benchmark::State& s) { run(s, 3, ZetaKernel::EnumerateSerial); }
void BM_Parallel3(benchmark::State& s) { run(s, 3, ZetaKernel::EnumerateParallel); }
void BM_Goss3(benchmark::State& s) { run(s, 3, ZetaKernel::Goss); }

}  // namespace

BENCHMARK(BM_Serial)->ArgsProduct({{8, 16, 24}, {1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->ArgsProduct({{8, 16, 24}, {1, 2, 4, 0}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Goss)->ArgsProduct({{8, 16, 24, 64}, {1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Serial3)->ArgsProduct({{8, 16, 24}, {1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel3)->ArgsProduct({{8, 16, 24}, {1, 4, 0}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Goss3)->ArgsProduct({{8, 16, 24, 64}, {1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
