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

#include "quatsim/embed.hpp"

#include <algorithm>
#include <sstream>

#include "quatsim/error.hpp"

namespace quatsim {

EmbeddingPair split(const QMatrix &a) {
    EmbeddingPair pair{CMatrix(a.rows(), a.cols()), CMatrix(a.rows(), a.cols())};
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            auto [g1, g2] = complex_pair(a(r, c));
            pair.gamma1(r, c) = g1;
            pair.gamma2(r, c) = g2;
        }
    }
    return pair;
}

QMatrix recompose(const EmbeddingPair &pair) {
    if (pair.gamma1.rows() != pair.gamma2.rows() || pair.gamma1.cols() != pair.gamma2.cols()) {
        throw DimensionError("recompose: gamma1 and gamma2 differ in shape");
    }
    QMatrix a(pair.gamma1.rows(), pair.gamma1.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            a(r, c) = Quaternion::from_complex_pair(pair.gamma1(r, c), pair.gamma2(r, c));
        }
    }
    return a;
}

CMatrix psi(const QMatrix &a) {
    const std::size_t p = a.rows();
    const std::size_t d = a.cols();
    CMatrix m(2 * p, 2 * d);
    for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            auto [g1, g2] = complex_pair(a(r, c));
            m(r, c) = g1;
            m(r, d + c) = g2;
            m(p + r, c) = -std::conj(g2);
            m(p + r, d + c) = std::conj(g1);
        }
    }
    return m;
}

std::vector<Complex> psi_vector(const QVector &phi) {
    const std::size_t d = phi.dim();
    std::vector<Complex> x(2 * d);
    for (std::size_t r = 0; r < d; ++r) {
        auto [a, b] = complex_pair(phi[r]);
        x[r] = a;
        x[d + r] = -std::conj(b);
    }
    return x;
}

QVector psi_vector_inv(const std::vector<Complex> &x) {
    if (x.size() % 2 != 0) {
        throw DimensionError("psi_vector_inv: odd length");
    }
    const std::size_t d = x.size() / 2;
    QVector phi(d);
    for (std::size_t r = 0; r < d; ++r) {
        phi[r] = Quaternion::from_complex_pair(x[r], -std::conj(x[d + r]));
    }
    return phi;
}

double image_residual(const CMatrix &m) {
    if (m.rows() % 2 != 0 || m.cols() % 2 != 0) {
        std::ostringstream msg;
        msg << "image_residual: " << m.rows() << "x" << m.cols() << " has an odd dimension";
        throw DimensionError(msg.str());
    }
    const std::size_t p = m.rows() / 2;
    const std::size_t d = m.cols() / 2;
    // J_p conj(M) J_d^{-1} = [[conj D, -conj C], [-conj B, conj A]]
    // for M = [[A, B], [C, D]].
    double worst = 0.0;
    for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            Complex a = m(r, c);
            Complex b = m(r, d + c);
            Complex cc = m(p + r, c);
            Complex dd = m(p + r, d + c);
            worst = std::max({worst, std::abs(a - std::conj(dd)), std::abs(b + std::conj(cc)),
                              std::abs(cc + std::conj(b)), std::abs(dd - std::conj(a))});
        }
    }
    return worst;
}

bool in_image(const CMatrix &m, double tolerance) { return image_residual(m) <= tolerance; }

QMatrix psi_inv(const CMatrix &m, double tolerance) {
    double residual = image_residual(m);
    if (residual > tolerance) {
        std::ostringstream msg;
        msg << "psi_inv: matrix is not in the image of psi (J-symmetry residual " << residual << ")";
        throw DomainError(msg.str());
    }
    const std::size_t p = m.rows() / 2;
    const std::size_t d = m.cols() / 2;
    QMatrix a(p, d);
    for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            a(r, c) = Quaternion::from_complex_pair(m(r, c), m(r, d + c));
        }
    }
    return a;
}

}  // namespace quatsim
