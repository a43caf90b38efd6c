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

#ifndef QUATSIM_EMBED_HPP
#define QUATSIM_EMBED_HPP

#include <cstddef>

#include "quatsim/cmatrix.hpp"
#include "quatsim/qmatrix.hpp"

namespace quatsim {

/// A = gamma1 + gamma2 j, split entrywise.
struct EmbeddingPair {
    CMatrix gamma1;
    CMatrix gamma2;
};

EmbeddingPair split(const QMatrix &a);
QMatrix recompose(const EmbeddingPair &pair);

/// psi: M_{p,d}(H) -> M_{2p,2d}(C), A -> [[G1, G2], [-conj(G2), conj(G1)]].
///
/// R-linear, multiplicative and compatible with the adjoint.
CMatrix psi(const QMatrix &a);

/// Complex vector image of phi = a + b j: the first column [a; -conj(b)] of
/// psi applied to phi viewed as a d x 1 matrix.
std::vector<Complex> psi_vector(const QVector &phi);

/// Inverse of psi_vector.
QVector psi_vector_inv(const std::vector<Complex> &x);

/// max |M - J_p conj(M) J_d^{-1}|, J_n = [[0, I_n], [-I_n, 0]].
/// Throws DimensionError for odd dimensions.
double image_residual(const CMatrix &m);

/// True iff image_residual(m) <= tolerance.
bool in_image(const CMatrix &m, double tolerance = 1e-9);

/// Left inverse of psi: reads G1 and G2 from the top blocks. Throws
/// DomainError if m is not in the image of psi within tolerance.
QMatrix psi_inv(const CMatrix &m, double tolerance = 1e-9);

}  // namespace quatsim

#endif
