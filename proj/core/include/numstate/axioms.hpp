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
#include <optional>
#include <string>
#include <vector>

#include "numstate/arith_space.hpp"
#include "numstate/radix.hpp"

namespace numstate {

/// Exhaustive axiom sweeps cube the state count; they are refused above this
/// modulus. Larger radices run the seeded sampling mode instead.
inline constexpr std::uint64_t kAxiomExhaustiveCap = 256;

/// Default crossover: exhaustive up to here, sampled above.
inline constexpr std::uint64_t kAxiomExhaustiveDefault = 64;

struct AxiomCheck {
    std::string name;
    bool passed;
    std::uint64_t cases_checked;
    std::string detail;  // counterexample on failure, empty otherwise
};

struct AxiomSuiteOptions {
    std::uint64_t seed = 0;
    std::uint64_t samples = 10000;  // per check, in sampled mode
    /// Force a mode; default picks exhaustive iff modulus <= 64.
    std::optional<bool> exhaustive;
    /// Successor realization the whole suite is built on; empty means the
    /// canonical carry-scan successor. Addition and multiplication are
    /// rebuilt from whatever is injected here, so a corrupted successor
    /// corrupts the full operator family consistently.
    SuccessorFn successor;
};

struct AxiomSuiteReport {
    Radix radix;
    bool exhaustive;
    std::uint64_t seed;
    std::uint64_t samples;  // 0 in exhaustive mode
    std::vector<AxiomCheck> checks;

    bool all_passed() const;
};

/// Verifies the commutative-ring-with-identity axioms of the operator-built
/// arithmetic, plus successor coherence and the cross-validation of operator
/// results against the integer reference. The nine ring axioms are checked
/// one by one:
///   add-associativity, add-commutativity, add-identity, add-inverses,
///   mul-associativity, mul-commutativity, mul-identity,
///   left-distributivity, right-distributivity
/// followed by successor-coherence (the unit-step successor agrees with
/// adding the encoding of 1) and oracle-coherence-add / oracle-coherence-mul.
/// Every equality is evaluated through the operator constructions; decode is
/// used only for the oracle cross-validation checks and for printing
/// counterexamples.
AxiomSuiteReport run_axiom_suite(const Radix& radix,
                                 const AxiomSuiteOptions& options = {});

}  // namespace numstate
