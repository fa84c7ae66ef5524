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
#include <functional>
#include <optional>

#include "numstate/radix.hpp"
#include "numstate/superposition.hpp"

namespace numstate {

/// A basis label on the doubled register space. The left register occupies
/// components 1..L, the right register components L+1..2L; both share one
/// radix (enforced, std::invalid_argument otherwise).
struct PairState {
    DigitString left;
    DigitString right;

    PairState(DigitString left_label, DigitString right_label);

    friend bool operator==(const PairState&, const PairState&) = default;
};

/// Signature of a successor realization: component index (1-based) and input
/// label to output label. Used to inject alternative successors into the
/// constructions below (the axiom suite's fault fixtures rely on this).
using SuccessorFn = std::function<DigitString(int, const DigitString&)>;

/// Adds `steps` to the digit at `component`, mod base; every other digit is
/// untouched. steps may be negative; the action has period base.
DigitString cyclic_shift(const DigitString& state, int component,
                         std::int64_t steps);

/// The digit-value projection as a partial map on labels: returns the label
/// unchanged when its digit at `component` equals `value`, nothing otherwise.
std::optional<DigitString> project_digit(const DigitString& state,
                                         int component, int value);

/// The successor for a component: adds base^(component-1) mod base^length.
///
/// Evaluated as a single carry scan: increment the digit at `component`;
/// while the increment wrapped a digit from base-1 to 0 and a higher
/// component exists, increment that next component. When every component from
/// `component` up wraps, the chain falls off the end and the value reduces
/// mod base^length.
DigitString successor_apply(int component, const DigitString& state);

/// `times`-fold repetition of successor_apply.
DigitString successor_power_apply(int component, std::uint64_t times,
                                  const DigitString& state);

/// Linear extension of the successor to superpositions: labels are mapped,
/// amplitudes are carried unchanged, the norm is preserved exactly.
Superposition successor_apply_super(int component, const Superposition& psi);

/// Register addition: the left label is unchanged and the right becomes
/// left + right mod base^length. Implemented literally as the product of
/// successor powers, component by component in ascending order — the digit
/// at component j of the left register drives j's successor j-digit times.
PairState add_apply(const PairState& pair);

/// target + s*w mod base^length, by schoolbook accumulation: for each
/// component j of s, the "add w scaled by base^(j-1)" primitive runs s(j)
/// times, itself built from successor powers at shifted components. Cost is
/// polynomial in base and length. With target = 0 this realizes the product.
DigitString times_apply(const DigitString& s, const DigitString& w,
                        const DigitString& target);

// Generic forms of the two constructions above, parameterized on the
// successor realization they are built from.
DigitString add_with(const SuccessorFn& successor, const DigitString& s,
                     const DigitString& w);
DigitString times_with(const SuccessorFn& successor, const DigitString& s,
                       const DigitString& w, const DigitString& target);

}  // namespace numstate
