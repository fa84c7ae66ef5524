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

#include "numstate/operator_matrix.hpp"

namespace numstate {

inline constexpr double kHermitianResidualTolerance = 1e-10;
inline constexpr double kRoundTripFrobeniusTolerance = 1e-9;

/// A Hermitian matrix H and evolution time t with exp(-iHt) equal to some
/// target unitary. H is not unique; only the round-trip residual and
/// Hermiticity are contractual.
struct HermitianGenerator {
    ComplexMatrix entries;
    double time;
};

/// Finds H with exp(-iHt) = op. Eigenphases of H*t are taken in the
/// principal branch (-pi, pi]. Throws std::domain_error when op is not
/// unitary within tolerance or t is not positive.
HermitianGenerator extract_hamiltonian(const DenseOperator& op, double time);

/// exp(-iHt), computed by a self-adjoint eigendecomposition of H — a
/// different factorization path than the Schur form used for extraction, so
/// round-trip checks do not simply invert the extraction's own arithmetic.
ComplexMatrix evolve(const HermitianGenerator& generator);

/// max-entry residual of H - H†.
double hermiticity_residual(const ComplexMatrix& matrix);

/// Frobenius-norm distance.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace numstate
