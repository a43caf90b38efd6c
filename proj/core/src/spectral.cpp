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

#include "quatsim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "quatsim/cmatrix.hpp"
#include "quatsim/embed.hpp"
#include "quatsim/error.hpp"

namespace quatsim {

namespace {

constexpr double kClusterTolerance = 1e-8;
constexpr double kPsdTolerance = 1e-9;

std::vector<Complex> column_of(const CMatrix &m, std::size_t c) {
    std::vector<Complex> x(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        x[r] = m(r, c);
    }
    return x;
}

// v - sum_u u <u|v>, the component of v outside the right span of `basis`.
QVector project_out(QVector v, const std::vector<QVector> &basis) {
    for (const auto &u : basis) {
        v -= u * inner_product(u, v);
    }
    return v;
}

}  // namespace

QMatrix SpectralDecomposition::reconstruct() const {
    if (eigenvectors.empty()) {
        return {};
    }
    const std::size_t d = eigenvectors.front().dim();
    QMatrix a(d, d);
    for (std::size_t r = 0; r < eigenvectors.size(); ++r) {
        a += outer(eigenvectors[r], eigenvalues[r]);
    }
    return a;
}

QMatrix SpectralDecomposition::eigenvector_matrix() const { return QMatrix::from_columns(eigenvectors); }

SpectralDecomposition spectral_decompose(const QMatrix &a) {
    if (!is_self_adjoint(a)) {
        throw DomainError("spectral_decompose: input is not self-adjoint");
    }
    const std::size_t d = a.rows();
    SpectralDecomposition out;
    if (d == 0) {
        return out;
    }

    HermitianEig eig = hermitian_eig(psi(a));
    const double tol = kClusterTolerance * std::max(1.0, frobenius_norm(a));

    struct Pair {
        double lambda;
        QVector xi;
    };
    std::vector<Pair> pairs;
    pairs.reserve(d);

    std::size_t begin = 0;
    while (begin < 2 * d) {
        std::size_t end = begin + 1;
        while (end < 2 * d && eig.eigenvalues[end] - eig.eigenvalues[end - 1] <= tol) {
            ++end;
        }
        const std::size_t size = end - begin;
        if (size % 2 != 0) {
            std::ostringstream msg;
            msg << "spectral_decompose: eigenvalue cluster near " << eig.eigenvalues[begin]
                << " has odd multiplicity " << size;
            throw NumericalError(msg.str());
        }

        std::vector<QVector> candidates;
        for (std::size_t c = begin; c < end; ++c) {
            candidates.push_back(psi_vector_inv(column_of(eig.eigenvectors, c)));
        }
        // Each Kramers pair spans one quaternionic direction. Pivoting on the
        // largest residual keeps every accepted norm >= 1/sqrt(size/2).
        std::vector<QVector> accepted;
        std::vector<bool> used(candidates.size(), false);
        for (std::size_t n = 0; n < size / 2; ++n) {
            std::size_t best = 0;
            double best_norm = -1.0;
            QVector best_vec;
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                if (used[c]) {
                    continue;
                }
                QVector r = project_out(candidates[c], accepted);
                double nr = norm(r);
                if (nr > best_norm) {
                    best_norm = nr;
                    best = c;
                    best_vec = std::move(r);
                }
            }
            used[best] = true;
            // Second pass against round-off in the first projection.
            best_vec = project_out(best_vec * Quaternion(1.0 / best_norm), accepted);
            best_vec = best_vec * Quaternion(1.0 / norm(best_vec));
            accepted.push_back(best_vec);
        }
        for (auto &xi : accepted) {
            double lambda = inner_product(xi, a * xi).real();
            pairs.push_back({lambda, std::move(xi)});
        }
        begin = end;
    }

    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair &x, const Pair &y) { return x.lambda < y.lambda; });
    out.eigenvalues.reserve(d);
    out.eigenvectors.reserve(d);
    for (auto &p : pairs) {
        out.eigenvalues.push_back(p.lambda);
        out.eigenvectors.push_back(std::move(p.xi));
    }
    return out;
}

bool is_psd(const QMatrix &a) {
    if (!is_self_adjoint(a)) {
        return false;
    }
    if (a.rows() == 0) {
        return true;
    }
    auto spec = spectral_decompose(a);
    return spec.eigenvalues.front() >= -kPsdTolerance * std::max(1.0, frobenius_norm(a));
}

QMatrix inv_sqrt_psd(const QMatrix &a, double floor) {
    auto spec = spectral_decompose(a);
    if (!spec.eigenvalues.empty() && spec.eigenvalues.front() < floor) {
        std::ostringstream msg;
        msg << "inv_sqrt_psd: eigenvalue " << spec.eigenvalues.front() << " below floor " << floor;
        throw NumericalError(msg.str());
    }
    QMatrix s(a.rows(), a.cols());
    for (std::size_t r = 0; r < spec.eigenvalues.size(); ++r) {
        s += outer(spec.eigenvectors[r], 1.0 / std::sqrt(spec.eigenvalues[r]));
    }
    return s;
}

}  // namespace quatsim
