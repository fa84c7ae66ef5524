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

#include "numstate/arith_space.hpp"

#include <stdexcept>
#include <utility>

namespace numstate {

namespace {

void require_same_radix(const DigitString& a, const DigitString& b) {
    if (a.radix() != b.radix()) {
        throw std::invalid_argument("digit strings carry mismatched radices");
    }
}

}  // namespace

PairState::PairState(DigitString left_label, DigitString right_label)
    : left(std::move(left_label)), right(std::move(right_label)) {
    require_same_radix(left, right);
}

DigitString cyclic_shift(const DigitString& state, int component,
                         std::int64_t steps) {
    state.radix().require_component(component);
    const auto base = static_cast<std::int64_t>(state.radix().base());
    DigitString shifted = state;
    const std::int64_t current = shifted.digit(component);
    shifted.set_digit(component,
                      static_cast<int>((((current + steps) % base) + base) % base));
    return shifted;
}

std::optional<DigitString> project_digit(const DigitString& state,
                                         int component, int value) {
    state.radix().require_component(component);
    if (value < 0 || value >= state.radix().base()) {
        throw std::invalid_argument("projector digit value out of range");
    }
    if (state.digit(component) != value) {
        return std::nullopt;
    }
    return state;
}

DigitString successor_apply(int component, const DigitString& state) {
    state.radix().require_component(component);
    const int base = state.radix().base();
    const int length = state.radix().length();
    DigitString next = state;
    // Carry scan: the wrap condition "digit was base-1" is exactly the
    // projection each carry term is gated on.
    for (int j = component; j <= length; ++j) {
        const int incremented = (next.digit(j) + 1) % base;
        next.set_digit(j, incremented);
        if (incremented != 0) {
            break;  // no wrap, chain ends
        }
        // Wrapped from base-1 to 0; carry into j+1 unless the chain has
        // reached the top component, in which case it drops off the end
        // (reduction mod base^length).
    }
    return next;
}

DigitString successor_power_apply(int component, std::uint64_t times,
                                  const DigitString& state) {
    DigitString result = state;
    for (std::uint64_t i = 0; i < times; ++i) {
        result = successor_apply(component, result);
    }
    return result;
}

Superposition successor_apply_super(int component, const Superposition& psi) {
    return psi.map_basis([component](const DigitString& label) {
        return successor_apply(component, label);
    });
}

DigitString add_with(const SuccessorFn& successor, const DigitString& s,
                     const DigitString& w) {
    require_same_radix(s, w);
    DigitString sum = w;
    // Product of successor powers, ascending components: component j of the
    // left register applies the j-successor s(j) times. The factors commute,
    // so the order is a determinism convention only.
    for (int j = 1; j <= s.radix().length(); ++j) {
        const int repetitions = s.digit(j);
        for (int r = 0; r < repetitions; ++r) {
            sum = successor(j, sum);
        }
    }
    return sum;
}

PairState add_apply(const PairState& pair) {
    DigitString sum = add_with(
        [](int j, const DigitString& x) { return successor_apply(j, x); },
        pair.left, pair.right);
    return PairState(pair.left, std::move(sum));
}

DigitString times_with(const SuccessorFn& successor, const DigitString& s,
                       const DigitString& w, const DigitString& target) {
    require_same_radix(s, w);
    require_same_radix(s, target);
    const int length = s.radix().length();
    DigitString accumulated = target;
    // Schoolbook: component j of s contributes s(j) repetitions of
    // "add w scaled by the weight of component j". Scaling w shifts its
    // component i to component i+j-1; contributions past the top component
    // vanish mod base^length and are skipped.
    for (int j = 1; j <= length; ++j) {
        for (int rep = 0; rep < s.digit(j); ++rep) {
            for (int i = 1; i + j - 1 <= length; ++i) {
                const int shifted_component = i + j - 1;
                for (int r = 0; r < w.digit(i); ++r) {
                    accumulated = successor(shifted_component, accumulated);
                }
            }
        }
    }
    return accumulated;
}

DigitString times_apply(const DigitString& s, const DigitString& w,
                        const DigitString& target) {
    return times_with(
        [](int j, const DigitString& x) { return successor_apply(j, x); }, s, w,
        target);
}

}  // namespace numstate
