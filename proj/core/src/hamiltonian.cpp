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

#include "numstate/hamiltonian.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace numstate {

HermitianGenerator extract_hamiltonian(const DenseOperator& op, double time) {
    if (!(time > 0.0)) {
        throw std::domain_error("evolution time must be positive");
    }
    const UnitarityCheck check = check_unitary(op);
    if (!check.unitary) {
        throw std::domain_error(
            "cannot extract a generator from a non-unitary operator, residual " +
            std::to_string(check.residual));
    }

    // Schur form of a unitary is diagonal up to roundoff, with the
    // eigenvalues on the unit circle along the diagonal and an exactly
    // unitary basis Q. H = Q diag(phase/t) Q† is Hermitian by construction.
    const Eigen::ComplexSchur<ComplexMatrix> schur(op.entries);
    if (schur.info() != Eigen::Success) {
        throw std::runtime_error("Schur decomposition failed");
    }
    const ComplexMatrix& q = schur.matrixU();
    const Eigen::Index dim = op.dim();

    Eigen::VectorXd phases(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        // exp(-i h t) must equal the eigenvalue, with h*t in the principal
        // branch (-pi, pi]. An eigenvalue of exactly -1 maps to +pi.
        double phase = -std::arg(schur.matrixT()(i, i));
        if (phase <= -std::numbers::pi) {
            phase += 2.0 * std::numbers::pi;
        }
        phases(i) = phase / time;
    }

    ComplexMatrix h = q * phases.asDiagonal() * q.adjoint();
    h = ((h + h.adjoint()) / 2.0).eval();  // symmetrize away roundoff
    return HermitianGenerator{std::move(h), time};
}

ComplexMatrix evolve(const HermitianGenerator& generator) {
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(generator.entries);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    const Eigen::Index dim = generator.entries.rows();
    Eigen::VectorXcd evolution(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        evolution(i) = std::exp(std::complex<double>(
            0.0, -solver.eigenvalues()(i) * generator.time));
    }
    return solver.eigenvectors() * evolution.asDiagonal() *
           solver.eigenvectors().adjoint();
}

double hermiticity_residual(const ComplexMatrix& matrix) {
    return (matrix - matrix.adjoint().eval()).cwiseAbs().maxCoeff();
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix dimensions differ");
    }
    return (a - b).norm();
}

}  // namespace numstate
