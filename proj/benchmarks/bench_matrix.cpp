// Copyright 2026 The numstate Authors
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

#include "numstate/hamiltonian.hpp"
#include "numstate/operator_matrix.hpp"
#include "numstate/oracle.hpp"
#include "numstate/phys_space.hpp"
#include "numstate/rng.hpp"

namespace {

using namespace numstate;

void BM_SuccessorMatrix(benchmark::State& state) {
    const Radix radix(2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(successor_matrix(1, radix));
    }
}
BENCHMARK(BM_SuccessorMatrix)->Arg(4)->Arg(6)->Arg(8);

void BM_SuccessorMatrixLiteral(benchmark::State& state) {
    const Radix radix(2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(successor_matrix_literal(1, radix));
    }
}
BENCHMARK(BM_SuccessorMatrixLiteral)->Arg(4)->Arg(6)->Arg(8);

void BM_CheckUnitary(benchmark::State& state) {
    const DenseOperator op =
        successor_matrix(1, Radix(2, static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_unitary(op));
    }
}
BENCHMARK(BM_CheckUnitary)->Arg(6)->Arg(8);

void BM_ExtractHamiltonian(benchmark::State& state) {
    const DenseOperator op =
        successor_matrix(1, Radix(2, static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_hamiltonian(op, 1.0));
    }
}
BENCHMARK(BM_ExtractHamiltonian)->Arg(2)->Arg(3)->Arg(5);

void BM_HaarUnitary(benchmark::State& state) {
    Rng rng(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(haar_unitary(state.range(0), rng));
    }
}
BENCHMARK(BM_HaarUnitary)->Arg(8)->Arg(16);

void BM_EnumerateRelabelings(benchmark::State& state) {
    const LabelSets labels = LabelSets::defaults(
        Radix(3, static_cast<int>(state.range(0))));
    for (auto _ : state) {
        std::uint64_t visited = 0;
        enumerate_relabelings(labels,
                              [&visited](const Relabeling&) { ++visited; });
        benchmark::DoNotOptimize(visited);
    }
}
BENCHMARK(BM_EnumerateRelabelings)->Arg(3)->Arg(4)->Arg(5);

void BM_RelabelingRoundTrip(benchmark::State& state) {
    const Radix radix(3, 3);
    const Relabeling map(LabelSets::defaults(radix), {2, 0, 1}, {1, 2, 0});
    const DigitString s = encode_number(17, radix);
    for (auto _ : state) {
        benchmark::DoNotOptimize(to_abstract(map, to_physical(map, s)));
    }
}
BENCHMARK(BM_RelabelingRoundTrip);

}  // namespace
