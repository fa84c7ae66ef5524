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
#include <functional>
#include <map>

#include "numstate/radix.hpp"

namespace numstate {

/// Terms with |amplitude| below this are dropped on construction.
inline constexpr double kAmplitudePruneThreshold = 1e-15;

/// Allowed deviation of the stored l2 norm from 1. The arithmetic operators
/// only permute basis labels and never combine amplitudes, so this tolerance
/// guards input construction, not operator application.
inline constexpr double kNormTolerance = 1e-12;

/// A sparse unit-norm vector over the basis of digit strings.
class Superposition {
  public:
    using TermMap = std::map<DigitString, std::complex<double>>;

    /// Single basis label with amplitude 1.
    static Superposition basis_state(const DigitString& label);

    /// Prunes sub-threshold terms, then requires unit norm within
    /// kNormTolerance (throws std::invalid_argument otherwise). Labels must
    /// all carry `radix`.
    Superposition(Radix radix, TermMap terms);

    const Radix& radix() const { return radix_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Amplitude of a label, zero if absent.
    std::complex<double> amplitude(const DigitString& label) const;

    /// sqrt of the summed |amplitude|^2.
    double norm() const;

    /// Relabels every term through `relabel`, carrying amplitudes unchanged.
    /// If two labels collide their amplitudes add; for bijective relabellings
    /// (all arithmetic operators) the norm is preserved exactly.
    Superposition map_basis(
        const std::function<DigitString(const DigitString&)>& relabel) const;

  private:
    Radix radix_;
    TermMap terms_;
};

}  // namespace numstate
