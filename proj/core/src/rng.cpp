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

#include "numstate/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace numstate {

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below requires a nonzero bound");
    }
    const std::uint64_t limit =
        bound * (std::numeric_limits<std::uint64_t>::max() / bound);
    std::uint64_t draw = next_u64();
    while (draw >= limit) {
        draw = next_u64();
    }
    return draw % bound;
}

double Rng::uniform_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1p-53;
}

std::pair<double, double> Rng::gaussian_pair() {
    // Box-Muller; u1 is kept away from zero so the log is finite.
    const double u1 =
        (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
    const double u2 = uniform_unit();
    const double magnitude = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {magnitude * std::cos(angle), magnitude * std::sin(angle)};
}

std::complex<double> Rng::gaussian_complex() {
    auto [re, im] = gaussian_pair();
    return {re, im};
}

}  // namespace numstate
