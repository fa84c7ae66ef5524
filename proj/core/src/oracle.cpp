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

#include "numstate/oracle.hpp"

#include <stdexcept>
#include <string>

namespace numstate {

namespace {

void require_in_range(std::uint64_t n, const Radix& radix, const char* what) {
    if (n >= radix.modulus()) {
        throw std::out_of_range(std::string(what) + " " + std::to_string(n) +
                                " outside 0.." +
                                std::to_string(radix.modulus() - 1));
    }
}

}  // namespace

DigitString encode_number(std::uint64_t n, const Radix& radix) {
    require_in_range(n, radix, "number");
    std::vector<int> digits(static_cast<std::size_t>(radix.length()));
    const auto base = static_cast<std::uint64_t>(radix.base());
    for (auto& d : digits) {
        d = static_cast<int>(n % base);
        n /= base;
    }
    return DigitString(radix, std::move(digits));
}

std::uint64_t decode_number(const DigitString& s) {
    const auto base = static_cast<std::uint64_t>(s.radix().base());
    std::uint64_t value = 0;
    // Horner, most-significant component first.
    for (auto it = s.digits().rbegin(); it != s.digits().rend(); ++it) {
        value = value * base + static_cast<std::uint64_t>(*it);
    }
    return value;
}

std::uint64_t oracle_add(std::uint64_t n, std::uint64_t m, const Radix& radix) {
    require_in_range(n, radix, "addend");
    require_in_range(m, radix, "addend");
    return (n + m) % radix.modulus();  // both < 2^20, no overflow
}

std::uint64_t oracle_mul(std::uint64_t n, std::uint64_t m, const Radix& radix) {
    require_in_range(n, radix, "factor");
    require_in_range(m, radix, "factor");
    return (n * m) % radix.modulus();  // product < 2^40, no overflow
}

}  // namespace numstate
