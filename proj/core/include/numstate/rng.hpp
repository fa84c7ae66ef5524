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

#include <complex>
#include <cstdint>
#include <random>
#include <utility>

namespace numstate {

/// Seeded random source with implementation-independent output. std::mt19937_64
/// has a standard-fixed sequence, but the std distributions do not, so the
/// bounded/real/Gaussian draws are implemented here directly. Reports that
/// sample record their seed; identical seeds give identical bytes.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Unbiased draw from [0, bound) by rejection; bound must be nonzero.
    std::uint64_t uniform_below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform_unit();

    /// Standard normal pair (Box-Muller).
    std::pair<double, double> gaussian_pair();

    /// Complex Gaussian with unit-variance real and imaginary parts.
    std::complex<double> gaussian_complex();

  private:
    std::mt19937_64 engine_;
};

}  // namespace numstate
