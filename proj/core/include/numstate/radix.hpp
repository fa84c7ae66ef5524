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

#include <compare>
#include <cstdint>
#include <vector>

namespace numstate {

/// Everything in this library works with exact 64-bit integers. Exhaustive
/// sweeps and dense operators are only meaningful at desk scale, so the
/// modulus base^length is capped here.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 20;

/// A positional number system: `base` symbols per digit (the digit alphabet,
/// at least 2; unary is excluded) and `length` components. Numbers are
/// elements of Z mod base^length.
class Radix {
  public:
    /// Throws std::invalid_argument for base < 2 or length < 1, and
    /// std::domain_error when base^length exceeds kMaxModulus.
    Radix(int base, int length);

    int base() const { return base_; }
    int length() const { return length_; }

    /// base^length, the modulus of the represented arithmetic.
    std::uint64_t modulus() const { return modulus_; }

    /// base^(component-1): the positional weight of a component.
    /// Components are 1-based; component 1 is least significant.
    std::uint64_t component_weight(int component) const;

    /// Throws std::out_of_range unless 1 <= component <= length.
    void require_component(int component) const;

    friend bool operator==(const Radix&, const Radix&) = default;

  private:
    int base_;
    int length_;
    std::uint64_t modulus_;
};

/// A basis label: one digit per component, each in [0, base). Component j
/// (1-based) carries positional weight base^(j-1), so digits are stored
/// least-significant first.
class DigitString {
  public:
    /// Throws std::invalid_argument if the digit count differs from
    /// radix.length() or any digit is outside [0, base).
    DigitString(Radix radix, std::vector<int> digits);

    static DigitString zero(const Radix& radix);

    const Radix& radix() const { return radix_; }
    const std::vector<int>& digits() const { return digits_; }

    /// 1-based component access; throws std::out_of_range on a bad index.
    int digit(int component) const;
    void set_digit(int component, int value);

    friend bool operator==(const DigitString&, const DigitString&) = default;
    std::strong_ordering operator<=>(const DigitString& other) const;

  private:
    Radix radix_;
    std::vector<int> digits_;
};

}  // namespace numstate
