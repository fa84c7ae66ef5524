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

#include "numstate/superposition.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace numstate {

Superposition Superposition::basis_state(const DigitString& label) {
    TermMap terms;
    terms.emplace(label, std::complex<double>{1.0, 0.0});
    return Superposition(label.radix(), std::move(terms));
}

Superposition::Superposition(Radix radix, TermMap terms) : radix_(radix) {
    double norm_sq = 0.0;
    for (auto& [label, amplitude] : terms) {
        if (label.radix() != radix_) {
            throw std::invalid_argument(
                "superposition term carries a different radix");
        }
        if (std::abs(amplitude) < kAmplitudePruneThreshold) {
            continue;
        }
        norm_sq += std::norm(amplitude);
        terms_.emplace(label, amplitude);
    }
    if (std::abs(std::sqrt(norm_sq) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("superposition is not unit norm");
    }
}

std::complex<double> Superposition::amplitude(const DigitString& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? std::complex<double>{0.0, 0.0} : it->second;
}

double Superposition::norm() const {
    double norm_sq = 0.0;
    for (const auto& [label, amplitude] : terms_) {
        norm_sq += std::norm(amplitude);
    }
    return std::sqrt(norm_sq);
}

Superposition Superposition::map_basis(
    const std::function<DigitString(const DigitString&)>& relabel) const {
    TermMap mapped;
    for (const auto& [label, amplitude] : terms_) {
        mapped[relabel(label)] += amplitude;
    }
    return Superposition(radix_, std::move(mapped));
}

}  // namespace numstate
