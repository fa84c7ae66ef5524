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

#include "numstate/resource_model.hpp"

#include <numeric>
#include <stdexcept>

#include "numstate/arith_space.hpp"

namespace numstate {

CostRatio CostRatio::reduced(std::uint64_t numerator,
                             std::uint64_t denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("zero denominator");
    }
    const std::uint64_t divisor = std::gcd(numerator, denominator);
    return CostRatio{numerator / divisor, denominator / divisor};
}

std::uint64_t direct_cost(int component, const Radix& radix) {
    radix.require_component(component);
    return static_cast<std::uint64_t>(radix.length() - component + 1);
}

std::uint64_t iterated_cost(int component, const Radix& radix) {
    const std::uint64_t repetitions = radix.component_weight(component);
    if (repetitions > kMaxModulus) {
        throw std::domain_error("iteration count exceeds the desk-scale cap");
    }
    return repetitions * static_cast<std::uint64_t>(radix.length());
}

std::uint64_t polynomial_budget(const Radix& radix) {
    const auto product = static_cast<std::uint64_t>(radix.base()) *
                         static_cast<std::uint64_t>(radix.length());
    return product * product;
}

DigitString run_direct_strategy(int component, const DigitString& state,
                                ExecutionCounter& counter) {
    counter.factor_units += direct_cost(component, state.radix());
    return successor_apply(component, state);
}

DigitString run_iterated_strategy(int component, const DigitString& state,
                                  ExecutionCounter& counter) {
    const std::uint64_t repetitions =
        state.radix().component_weight(component);
    DigitString result = state;
    for (std::uint64_t i = 0; i < repetitions; ++i) {
        result = successor_apply(1, result);
        counter.unit_successor_calls += 1;
        counter.factor_units += direct_cost(1, state.radix());
    }
    return result;
}

std::vector<ResourceEntry> efficiency_report(const Radix& radix) {
    const std::uint64_t budget = polynomial_budget(radix);
    // Probe state with every digit at base-1: the longest possible carry.
    DigitString probe = DigitString::zero(radix);
    for (int j = 1; j <= radix.length(); ++j) {
        probe.set_digit(j, radix.base() - 1);
    }

    std::vector<ResourceEntry> report;
    report.reserve(static_cast<std::size_t>(radix.length()));
    for (int j = 1; j <= radix.length(); ++j) {
        const std::uint64_t direct = direct_cost(j, radix);
        const std::uint64_t iterated = iterated_cost(j, radix);

        ExecutionCounter direct_counter;
        ExecutionCounter iterated_counter;
        const DigitString direct_result =
            run_direct_strategy(j, probe, direct_counter);
        const DigitString iterated_result =
            run_iterated_strategy(j, probe, iterated_counter);
        if (direct_result != iterated_result) {
            throw std::logic_error("strategy executions disagree");
        }
        if (iterated_counter.unit_successor_calls !=
                radix.component_weight(j) ||
            iterated_counter.factor_units != iterated) {
            throw std::logic_error("instrumented count deviates from model");
        }

        report.push_back(ResourceEntry{
            j, direct, iterated, CostRatio::reduced(iterated, direct),
            iterated <= budget});
    }
    return report;
}

std::uint64_t site_path_length(const Relabeling& map, int component) {
    return static_cast<std::uint64_t>(map.site_of_component(component)) + 1;
}

}  // namespace numstate
