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

#include "quatsim/random.hpp"

#include <cmath>

#include "quatsim/spectral.hpp"

namespace quatsim {

double Rng::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

std::size_t Rng::uniform_index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

Quaternion Rng::quaternion() {
    double a = normal();
    double b = normal();
    double c = normal();
    double d = normal();
    return {a, b, c, d};
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Quaternion random_unit_quaternion(Rng &rng) {
    Quaternion h;
    double n = 0.0;
    while (n < 1e-6) {
        h = rng.quaternion();
        n = abs(h);
    }
    return h / n;
}

QMatrix random_ginibre(Rng &rng, std::size_t rows, std::size_t cols) {
    QMatrix g(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            g(r, c) = rng.quaternion();
        }
    }
    return g;
}

QMatrix random_self_adjoint(Rng &rng, std::size_t d) {
    QMatrix g = random_ginibre(rng, d, d);
    return 0.5 * (g + adjoint(g));
}

QMatrix random_psd(Rng &rng, std::size_t d) {
    QMatrix g = random_ginibre(rng, d, d);
    QMatrix p = g * adjoint(g);
    // Exact self-adjointness; the product is only so up to rounding.
    return 0.5 * (p + adjoint(p));
}

QMatrix random_state_matrix(Rng &rng, std::size_t d) {
    QMatrix p = random_psd(rng, d);
    return p * (1.0 / trace(p));
}

QMatrix random_unitary(Rng &rng, std::size_t d) {
    return spectral_decompose(random_self_adjoint(rng, d)).eigenvector_matrix();
}

QVector random_vector(Rng &rng, std::size_t d) {
    QVector v(d);
    double n = 0.0;
    while (n < 1e-6) {
        for (std::size_t r = 0; r < d; ++r) {
            v[r] = rng.quaternion();
        }
        n = norm(v);
    }
    return v * Quaternion(1.0 / n);
}

std::variant<QMatrix, QVector> generate(std::uint64_t seed, std::size_t d, RandomKind kind) {
    Rng rng(seed);
    switch (kind) {
        case RandomKind::kState:
            return random_state_matrix(rng, d);
        case RandomKind::kUnitary:
            return random_unitary(rng, d);
        case RandomKind::kPsd:
            return random_psd(rng, d);
        case RandomKind::kVector:
            return random_vector(rng, d);
    }
    return QMatrix{};
}

}  // namespace quatsim
