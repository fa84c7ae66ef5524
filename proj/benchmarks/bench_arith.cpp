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

#include "numstate/arith_space.hpp"
#include "numstate/axioms.hpp"
#include "numstate/oracle.hpp"
#include "numstate/resource_model.hpp"

namespace {

using namespace numstate;

void BM_SuccessorApply(benchmark::State& state) {
    const Radix radix(2, static_cast<int>(state.range(0)));
    DigitString current = DigitString::zero(radix);
    for (auto _ : state) {
        current = successor_apply(1, current);
        benchmark::DoNotOptimize(current);
    }
}
BENCHMARK(BM_SuccessorApply)->Arg(4)->Arg(10)->Arg(20);

void BM_SuccessorSweep(benchmark::State& state) {
    const Radix radix(2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (std::uint64_t n = 0; n < radix.modulus(); ++n) {
            benchmark::DoNotOptimize(
                successor_apply(1, encode_number(n, radix)));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(radix.modulus()));
}
BENCHMARK(BM_SuccessorSweep)->Arg(8)->Arg(12);

void BM_AddApply(benchmark::State& state) {
    const Radix radix(10, 3);
    const DigitString left = encode_number(678, radix);
    DigitString right = encode_number(345, radix);
    for (auto _ : state) {
        right = add_apply(PairState(left, right)).right;
        benchmark::DoNotOptimize(right);
    }
}
BENCHMARK(BM_AddApply);

void BM_TimesApply(benchmark::State& state) {
    const Radix radix(2, 8);
    const DigitString a = encode_number(181, radix);
    const DigitString b = encode_number(203, radix);
    const DigitString zero = DigitString::zero(radix);
    for (auto _ : state) {
        benchmark::DoNotOptimize(times_apply(a, b, zero));
    }
}
BENCHMARK(BM_TimesApply);

void BM_DirectStrategy(benchmark::State& state) {
    const Radix radix(2, 10);
    const DigitString probe = encode_number(1023, radix);
    for (auto _ : state) {
        ExecutionCounter counter;
        benchmark::DoNotOptimize(run_direct_strategy(10, probe, counter));
    }
}
BENCHMARK(BM_DirectStrategy);

void BM_IteratedStrategy(benchmark::State& state) {
    const Radix radix(2, 10);
    const DigitString probe = encode_number(1023, radix);
    for (auto _ : state) {
        ExecutionCounter counter;
        benchmark::DoNotOptimize(run_iterated_strategy(10, probe, counter));
    }
}
BENCHMARK(BM_IteratedStrategy);

void BM_AxiomSuiteExhaustive(benchmark::State& state) {
    const Radix radix(2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_axiom_suite(radix));
    }
}
BENCHMARK(BM_AxiomSuiteExhaustive)->Arg(2)->Arg(3);

}  // namespace
