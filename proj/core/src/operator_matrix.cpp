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

#include "numstate/operator_matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "numstate/arith_space.hpp"
#include "numstate/oracle.hpp"

namespace numstate {

namespace {

void require_dense_dim(std::uint64_t dim) {
    if (dim > kDenseDimensionCap) {
        throw std::domain_error("dense dimension " + std::to_string(dim) +
                                " exceeds the cap " +
                                std::to_string(kDenseDimensionCap));
    }
}

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> image)
    : image_(std::move(image)) {
    std::vector<bool> hit(image_.size(), false);
    for (std::uint32_t target : image_) {
        if (target >= image_.size() || hit[target]) {
            throw std::invalid_argument("image array is not a permutation");
        }
        hit[target] = true;
    }
}

Permutation Permutation::identity(std::size_t size) {
    std::vector<std::uint32_t> image(size);
    for (std::size_t i = 0; i < size; ++i) {
        image[i] = static_cast<std::uint32_t>(i);
    }
    return Permutation(std::move(image));
}

Permutation Permutation::then(const Permutation& after) const {
    if (after.size() != size()) {
        throw std::invalid_argument("permutation sizes differ");
    }
    std::vector<std::uint32_t> image(size());
    for (std::size_t i = 0; i < size(); ++i) {
        image[i] = after.image_[image_[i]];
    }
    return Permutation(std::move(image));
}

Permutation Permutation::power(std::uint64_t exponent) const {
    Permutation result = identity(size());
    for (std::uint64_t i = 0; i < exponent; ++i) {
        result = result.then(*this);
    }
    return result;
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> image(size());
    for (std::size_t i = 0; i < size(); ++i) {
        image[image_[i]] = static_cast<std::uint32_t>(i);
    }
    return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (image_[i] != i) return false;
    }
    return true;
}

ComplexMatrix Permutation::to_matrix() const {
    const auto dim = static_cast<Eigen::Index>(size());
    ComplexMatrix matrix = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        matrix(static_cast<Eigen::Index>(image_[static_cast<std::size_t>(i)]),
               i) = 1.0;
    }
    return matrix;
}

Permutation basis_permutation(
    const Radix& radix,
    const std::function<DigitString(const DigitString&)>& map) {
    const std::uint64_t dim = radix.modulus();
    std::vector<std::uint32_t> image(dim);
    for (std::uint64_t n = 0; n < dim; ++n) {
        image[n] = static_cast<std::uint32_t>(
            decode_number(map(encode_number(n, radix))));
    }
    return Permutation(std::move(image));  // ctor rejects non-bijections
}

Permutation successor_permutation(int component, const Radix& radix) {
    radix.require_component(component);
    return basis_permutation(radix, [component](const DigitString& s) {
        return successor_apply(component, s);
    });
}

std::uint64_t pair_index(const DigitString& left, const DigitString& right) {
    if (left.radix() != right.radix()) {
        throw std::invalid_argument("pair registers carry mismatched radices");
    }
    return decode_number(left) + left.radix().modulus() * decode_number(right);
}

DenseOperator shift_matrix(int component, const Radix& radix) {
    radix.require_component(component);
    require_dense_dim(radix.modulus());
    Permutation perm =
        basis_permutation(radix, [component](const DigitString& s) {
            return cyclic_shift(s, component, 1);
        });
    ComplexMatrix entries = perm.to_matrix();
    return DenseOperator{std::move(entries), std::move(perm)};
}

DenseOperator projector_matrix(int value, int component, const Radix& radix) {
    radix.require_component(component);
    if (value < 0 || value >= radix.base()) {
        throw std::invalid_argument("projector digit value out of range");
    }
    require_dense_dim(radix.modulus());
    const auto dim = static_cast<Eigen::Index>(radix.modulus());
    ComplexMatrix entries = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index n = 0; n < dim; ++n) {
        const DigitString label =
            encode_number(static_cast<std::uint64_t>(n), radix);
        if (label.digit(component) == value) {
            entries(n, n) = 1.0;
        }
    }
    return DenseOperator{std::move(entries), std::nullopt};
}

DenseOperator successor_matrix(int component, const Radix& radix) {
    require_dense_dim(radix.modulus());
    Permutation perm = successor_permutation(component, radix);
    ComplexMatrix entries = perm.to_matrix();
    return DenseOperator{std::move(entries), std::move(perm)};
}

namespace {

/// Exact product factor * m for factors with at most one nonzero per row
/// (shift and projector compositions are of this shape): every output row is
/// one scaled row of m. Falls back to the general product otherwise.
ComplexMatrix sparse_row_product(const ComplexMatrix& factor,
                                 const ComplexMatrix& m) {
    const Eigen::Index dim = factor.rows();
    ComplexMatrix out = ComplexMatrix::Zero(dim, m.cols());
    for (Eigen::Index row = 0; row < dim; ++row) {
        Eigen::Index source = -1;
        for (Eigen::Index col = 0; col < factor.cols(); ++col) {
            if (factor(row, col) == std::complex<double>{0.0, 0.0}) continue;
            if (source != -1) {
                return factor * m;  // denser than expected
            }
            source = col;
        }
        if (source != -1) {
            out.row(row) = factor(row, source) * m.row(source);
        }
    }
    return out;
}

}  // namespace

DenseOperator successor_matrix_literal(int component, const Radix& radix) {
    radix.require_component(component);
    require_dense_dim(radix.modulus());
    const auto dim = static_cast<Eigen::Index>(radix.modulus());
    const int top_digit = radix.base() - 1;
    const ComplexMatrix identity = ComplexMatrix::Identity(dim, dim);

    // No carry-scan logic here: the operator is assembled purely from
    // shift and projector factors, term by term.
    ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
    ComplexMatrix wrap_chain = identity;  // product of wrap factors so far
    for (int n = component; n <= radix.length(); ++n) {
        const ComplexMatrix shift = shift_matrix(n, radix).entries;
        const ComplexMatrix wrap_projector =
            projector_matrix(top_digit, n, radix).entries;
        // Carry stops at n: shift n gated on "digit n is not base-1",
        // composed with the wraps of all lower components.
        const ComplexMatrix step_factor =
            sparse_row_product(shift, identity - wrap_projector);
        const ComplexMatrix wrap_factor =
            sparse_row_product(shift, wrap_projector);
        total += sparse_row_product(step_factor, wrap_chain);
        wrap_chain = sparse_row_product(wrap_factor, wrap_chain);
    }
    total += wrap_chain;  // the all-components-wrap term
    return DenseOperator{std::move(total), std::nullopt};
}

DenseOperator add_matrix(const Radix& radix) {
    const std::uint64_t modulus = radix.modulus();
    const std::uint64_t dim = modulus * modulus;
    require_dense_dim(dim);
    std::vector<std::uint32_t> image(dim);
    for (std::uint64_t left = 0; left < modulus; ++left) {
        for (std::uint64_t right = 0; right < modulus; ++right) {
            const std::uint64_t source = left + modulus * right;
            const std::uint64_t target =
                left + modulus * ((left + right) % modulus);
            image[source] = static_cast<std::uint32_t>(target);
        }
    }
    Permutation perm{std::move(image)};
    ComplexMatrix entries = perm.to_matrix();
    return DenseOperator{std::move(entries), std::move(perm)};
}

UnitarityCheck check_unitary(const DenseOperator& op) {
    const Eigen::Index dim = op.dim();
    const ComplexMatrix gram = op.entries.adjoint() * op.entries;
    const double residual =
        (gram - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
    return UnitarityCheck{residual <= kUnitaryResidualTolerance, residual};
}

DenseOperator conjugate_by(const DenseOperator& op,
                           const DenseOperator& unitary) {
    if (op.dim() != unitary.dim()) {
        throw std::invalid_argument("operator and unitary dimensions differ");
    }
    const UnitarityCheck check = check_unitary(unitary);
    if (!check.unitary) {
        throw std::domain_error("conjugating matrix is not unitary, residual " +
                                std::to_string(check.residual));
    }
    ComplexMatrix entries =
        unitary.entries * op.entries * unitary.entries.adjoint();
    // Conjugated operators are generally no longer basis permutations.
    return DenseOperator{std::move(entries), std::nullopt};
}

DenseOperator haar_unitary(Eigen::Index dim, Rng& rng) {
    if (dim < 1) {
        throw std::invalid_argument("unitary dimension must be >= 1");
    }
    require_dense_dim(static_cast<std::uint64_t>(dim));
    ComplexMatrix gaussian(dim, dim);
    for (Eigen::Index row = 0; row < dim; ++row) {
        for (Eigen::Index col = 0; col < dim; ++col) {
            gaussian(row, col) = rng.gaussian_complex();
        }
    }
    const Eigen::HouseholderQR<ComplexMatrix> qr(gaussian);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fold R's diagonal phases into Q so the distribution is Haar.
    for (Eigen::Index col = 0; col < dim; ++col) {
        const std::complex<double> diag = r(col, col);
        const double magnitude = std::abs(diag);
        const std::complex<double> phase =
            magnitude > 0.0 ? diag / magnitude : std::complex<double>{1.0, 0.0};
        q.col(col) *= phase;
    }
    return DenseOperator{std::move(q), std::nullopt};
}

}  // namespace numstate
