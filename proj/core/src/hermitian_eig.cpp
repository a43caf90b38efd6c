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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "quatsim/cmatrix.hpp"
#include "quatsim/error.hpp"

namespace quatsim {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTolerance = 1e-12;

double off_diagonal_norm(const CMatrix &a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(s);
}

// Annihilates a(p, q) with V = diag(1, conj(e)) * [[c, s], [-s, c]] acting on
// coordinates (p, q), where e = a(p, q) / |a(p, q)|.
void rotate(CMatrix &a, CMatrix &v, std::size_t p, std::size_t q) {
    Complex apq = a(p, q);
    double mag = std::abs(apq);
    if (mag == 0.0) {
        return;
    }
    Complex e = apq / mag;
    double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    double c = 1.0 / std::sqrt(1.0 + t * t);
    double s = t * c;
    Complex ce = std::conj(e);

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        Complex akp = a(k, p);
        Complex akq = a(k, q);
        a(k, p) = c * akp - s * ce * akq;
        a(k, q) = s * akp + c * ce * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        Complex apk = a(p, k);
        Complex aqk = a(q, k);
        a(p, k) = c * apk - s * e * aqk;
        a(q, k) = s * apk + c * e * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        Complex vkp = v(k, p);
        Complex vkq = v(k, q);
        v(k, p) = c * vkp - s * ce * vkq;
        v(k, q) = s * vkp + c * ce * vkq;
    }
}

}  // namespace

HermitianEig hermitian_eig(const CMatrix &m) {
    if (!is_hermitian(m)) {
        throw DomainError("hermitian_eig: input is not Hermitian");
    }
    const std::size_t n = m.rows();
    CMatrix a = m;
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = a(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }
    CMatrix v = CMatrix::identity(n);

    const double target = kOffDiagonalTolerance * frobenius_norm(m);
    int sweep = 0;
    while (off_diagonal_norm(a) > target) {
        if (++sweep > kMaxSweeps) {
            throw NumericalError("hermitian_eig: Jacobi iteration did not converge");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                rotate(a, v, p, q);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    HermitianEig out;
    out.eigenvalues.reserve(n);
    out.eigenvectors = CMatrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        out.eigenvalues.push_back(a(order[c], order[c]).real());
        for (std::size_t r = 0; r < n; ++r) {
            out.eigenvectors(r, c) = v(r, order[c]);
        }
    }
    return out;
}

}  // namespace quatsim
