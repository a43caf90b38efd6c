// Copyright 2026 The quatsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUATSIM_SPECTRAL_HPP
#define QUATSIM_SPECTRAL_HPP

#include <vector>

#include "quatsim/qmatrix.hpp"

namespace quatsim {

/// A = sum_r |xi_r> lambda_r <xi_r| with orthonormal xi_r.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;  // ascending
    std::vector<QVector> eigenvectors;

    QMatrix reconstruct() const;
    /// Matrix with the eigenvectors as columns (unitary).
    QMatrix eigenvector_matrix() const;
};

/// Spectral decomposition of a self-adjoint quaternionic matrix.
///
/// Diagonalizes psi(A) with the Hermitian Jacobi solver, groups its
/// eigenvalues into clusters (gap <= 1e-8 * max(1, |A|)), which must have
/// even size, and pulls one quaternionic eigenvector back per Kramers pair
/// as xi = x_top - conj(x_bottom) j. Degenerate clusters are
/// re-orthonormalized by pivoted quaternionic Gram-Schmidt.
///
/// Throws DomainError for non-self-adjoint input and NumericalError if a
/// cluster has odd size.
SpectralDecomposition spectral_decompose(const QMatrix &a);

/// Self-adjoint within tolerance and smallest eigenvalue >= -1e-9 * max(1, |A|).
bool is_psd(const QMatrix &a);

/// S = A^{-1/2} for PSD A, so that S A S = I. Throws NumericalError if an
/// eigenvalue falls below `floor`.
QMatrix inv_sqrt_psd(const QMatrix &a, double floor);

}  // namespace quatsim

#endif
