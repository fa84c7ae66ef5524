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

#include "numstate/radix.hpp"

namespace numstate {

// Plain-integer reference arithmetic mod base^length. Every operator-level
// construction in the library is checked against these; they never go
// through digit strings or operator machinery themselves.

/// Positional expansion of n, least-significant component first.
/// Throws std::out_of_range unless 0 <= n < radix.modulus().
DigitString encode_number(std::uint64_t n, const Radix& radix);

/// Inverse of encode_number: sum of digit(j) * base^(j-1).
std::uint64_t decode_number(const DigitString& s);

/// (n + m) mod base^length. Throws std::out_of_range on out-of-range inputs.
std::uint64_t oracle_add(std::uint64_t n, std::uint64_t m, const Radix& radix);

/// (n * m) mod base^length. Throws std::out_of_range on out-of-range inputs.
std::uint64_t oracle_mul(std::uint64_t n, std::uint64_t m, const Radix& radix);

}  // namespace numstate
