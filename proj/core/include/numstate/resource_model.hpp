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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numstate/phys_space.hpp"
#include "numstate/radix.hpp"

namespace numstate {

/// The elementary cost unit: one component-local shift-with-projection
/// factor application. A direct successor evaluation at component j touches
/// components j..L once each; an evaluation routed through repeated unit
/// steps at component 1 pays base^(j-1) full-length scans.
struct CostModel {
    static constexpr const char* kUnitName =
        "component shift-projection factor";
    Radix radix;
};

/// Exact reduced fraction.
struct CostRatio {
    std::uint64_t numerator;
    std::uint64_t denominator;

    static CostRatio reduced(std::uint64_t numerator,
                             std::uint64_t denominator);
    friend bool operator==(const CostRatio&, const CostRatio&) = default;
};

struct ResourceEntry {
    int component;
    std::uint64_t direct_cost;
    std::uint64_t iterated_cost;
    CostRatio ratio;           // iterated / direct
    bool iterated_efficient;   // iterated_cost <= (base*length)^2

    friend bool operator==(const ResourceEntry&, const ResourceEntry&) = default;
};

/// Factor applications for one carry scan starting at `component`:
/// length - component + 1.
std::uint64_t direct_cost(int component, const Radix& radix);

/// Factor applications for base^(component-1) repetitions of the unit-step
/// successor: base^(component-1) * length. Throws std::domain_error if the
/// repetition count exceeds the modulus cap.
std::uint64_t iterated_cost(int component, const Radix& radix);

/// The reporting convention for "polynomial in base and length":
/// (base * length)^2.
std::uint64_t polynomial_budget(const Radix& radix);

/// Instrumentation for strategy executions. Counters are written by the
/// run_* helpers below; each execution context owns its own counter.
struct ExecutionCounter {
    std::uint64_t unit_successor_calls = 0;  // applications of the component-1 successor
    std::uint64_t factor_units = 0;          // elementary factor applications
};

/// One carry scan at `component`; counts direct_cost(component) units.
DigitString run_direct_strategy(int component, const DigitString& state,
                                ExecutionCounter& counter);

/// base^(component-1) repetitions of the component-1 successor; counts one
/// unit-successor call and `length` factor units per repetition.
DigitString run_iterated_strategy(int component, const DigitString& state,
                                  ExecutionCounter& counter);

/// One entry per component. Each entry's costs come from the closed forms
/// above; before reporting, both strategies are executed on a probe state
/// and must agree (std::logic_error, never observed, if they do not) and the
/// iterated execution's counter must match the closed form exactly.
std::vector<ResourceEntry> efficiency_report(const Radix& radix);

/// Qualitative transport length: how many sites a procedure starting at the
/// first declared site traverses to reach the site of `component`, inclusive.
/// Nothing energetic is modeled; this is the declared-order distance only.
std::uint64_t site_path_length(const Relabeling& map, int component);

}  // namespace numstate
