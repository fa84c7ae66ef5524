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

#include "numstate/radix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace numstate {

Radix::Radix(int base, int length) : base_(base), length_(length), modulus_(1) {
    if (base < 2) {
        throw std::invalid_argument("radix base must be >= 2, got " +
                                    std::to_string(base));
    }
    if (length < 1) {
        throw std::invalid_argument("radix length must be >= 1, got " +
                                    std::to_string(length));
    }
    for (int j = 0; j < length; ++j) {
        if (modulus_ > kMaxModulus / static_cast<std::uint64_t>(base)) {
            throw std::domain_error(
                "modulus base^length exceeds the desk-scale cap 2^20");
        }
        modulus_ *= static_cast<std::uint64_t>(base);
    }
}

std::uint64_t Radix::component_weight(int component) const {
    require_component(component);
    std::uint64_t weight = 1;
    for (int j = 1; j < component; ++j) {
        weight *= static_cast<std::uint64_t>(base_);
    }
    return weight;
}

void Radix::require_component(int component) const {
    if (component < 1 || component > length_) {
        throw std::out_of_range("component index " + std::to_string(component) +
                                " outside 1.." + std::to_string(length_));
    }
}

DigitString::DigitString(Radix radix, std::vector<int> digits)
    : radix_(radix), digits_(std::move(digits)) {
    if (digits_.size() != static_cast<std::size_t>(radix_.length())) {
        throw std::invalid_argument(
            "digit count " + std::to_string(digits_.size()) +
            " does not match radix length " + std::to_string(radix_.length()));
    }
    for (int d : digits_) {
        if (d < 0 || d >= radix_.base()) {
            throw std::invalid_argument("digit value " + std::to_string(d) +
                                        " outside 0.." +
                                        std::to_string(radix_.base() - 1));
        }
    }
}

DigitString DigitString::zero(const Radix& radix) {
    return DigitString(radix, std::vector<int>(radix.length(), 0));
}

int DigitString::digit(int component) const {
    radix_.require_component(component);
    return digits_[static_cast<std::size_t>(component - 1)];
}

void DigitString::set_digit(int component, int value) {
    radix_.require_component(component);
    if (value < 0 || value >= radix_.base()) {
        throw std::invalid_argument("digit value " + std::to_string(value) +
                                    " outside 0.." +
                                    std::to_string(radix_.base() - 1));
    }
    digits_[static_cast<std::size_t>(component - 1)] = value;
}

std::strong_ordering DigitString::operator<=>(const DigitString& other) const {
    if (auto cmp = radix_.base() <=> other.radix_.base(); cmp != 0) return cmp;
    if (auto cmp = radix_.length() <=> other.radix_.length(); cmp != 0) return cmp;
    return digits_ <=> other.digits_;
}

}  // namespace numstate
