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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "numstate/radix.hpp"
#include "numstate/rng.hpp"

namespace numstate {

using ComplexMatrix =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                  Eigen::RowMajor>;

/// Dense realizations exist for exhaustive desk-scale verification only.
inline constexpr std::uint64_t kDenseDimensionCap = 4096;

/// Max-entry residual of U†U - I below which a matrix counts as unitary.
inline constexpr double kUnitaryResidualTolerance = 1e-10;

/// An exact permutation of basis indices: image_of(i) is where basis state i
/// is sent. Composition and powers stay in integer arithmetic, so operator
/// identities on permutations are checked without any floating point.
class Permutation {
  public:
    explicit Permutation(std::vector<std::uint32_t> image);
    static Permutation identity(std::size_t size);

    std::size_t size() const { return image_.size(); }
    std::uint32_t image_of(std::size_t index) const { return image_[index]; }
    const std::vector<std::uint32_t>& image() const { return image_; }

    /// Composition "this first, then `after`".
    Permutation then(const Permutation& after) const;
    Permutation power(std::uint64_t exponent) const;
    Permutation inverse() const;
    bool is_identity() const;

    /// The 0/1 matrix with entry [image_of(i), i] = 1.
    ComplexMatrix to_matrix() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    std::vector<std::uint32_t> image_;
};

/// A dense operator on the basis indexed by decoded digit strings (or by
/// pair indices for doubled-register operators). Operators that permute
/// basis labels also carry the exact permutation.
struct DenseOperator {
    ComplexMatrix entries;
    std::optional<Permutation> permutation;

    Eigen::Index dim() const { return entries.rows(); }
};

struct UnitarityCheck {
    bool unitary;
    double residual;  // max-entry residual of U†U - I
};

/// Sweeps every basis label through `map` and records the induced index
/// permutation. Throws std::invalid_argument if the map is not a bijection.
Permutation basis_permutation(
    const Radix& radix,
    const std::function<DigitString(const DigitString&)>& map);

/// The successor's exact basis permutation: index n -> n + base^(component-1)
/// mod base^length, derived from the carry-scan label action.
Permutation successor_permutation(int component, const Radix& radix);

/// Index of a pair label: left register in the low components, so
/// decode(left) + modulus * decode(right).
std::uint64_t pair_index(const DigitString& left, const DigitString& right);

/// Cyclic shift on one component, lifted to the full space: entry
/// [h+1 mod base, h] = 1 on the component's factor, identity elsewhere.
DenseOperator shift_matrix(int component, const Radix& radix);

/// Diagonal 0/1 projector selecting labels whose digit at `component` equals
/// `value`. Idempotent; the family over all values resolves the identity.
DenseOperator projector_matrix(int value, int component, const Radix& radix);

/// Permutation-backed successor matrix (the carry-scan realization).
DenseOperator successor_matrix(int component, const Radix& radix);

/// The successor built the long way: an explicit operator sum over carry
/// prefixes. Term n (for n = component..length) is
///     shift(n) * proj_complement(base-1, n) * prod_{l=component}^{n-1} shift(l) * proj(base-1, l)
/// plus the final all-wrap product over every component from `component` up.
/// Equals successor_matrix entry-exactly; the two constructions are
/// independent and cross-checked in the test suites.
DenseOperator successor_matrix_literal(int component, const Radix& radix);

/// Doubled-register addition as a permutation matrix on pair indices:
/// (left, right) -> (left, left + right mod base^length). Requires
/// modulus^2 within the dense cap.
DenseOperator add_matrix(const Radix& radix);

UnitarityCheck check_unitary(const DenseOperator& op);

/// U * op * U†. Requires matching dimensions and unitary U within tolerance.
DenseOperator conjugate_by(const DenseOperator& op, const DenseOperator& unitary);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// diagonal phases of R folded into Q.
DenseOperator haar_unitary(Eigen::Index dim, Rng& rng);

}  // namespace numstate
