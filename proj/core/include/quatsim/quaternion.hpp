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

#ifndef QUATSIM_QUATERNION_HPP
#define QUATSIM_QUATERNION_HPP

#include <complex>
#include <iosfwd>
#include <utility>

namespace quatsim {

using Complex = std::complex<double>;

class CMatrix;

/// A real quaternion h0 + i h1 + j h2 + k h3.
///
/// Multiplication is the Hamilton product, so `a * b != b * a` in general.
/// Values are plain data; every operation is pure.
struct Quaternion {
    double h0 = 0.0;
    double h1 = 0.0;
    double h2 = 0.0;
    double h3 = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double re) : h0(re) {}
    constexpr Quaternion(double a, double b, double c, double d) : h0(a), h1(b), h2(c), h3(d) {}

    static constexpr Quaternion one() { return {1, 0, 0, 0}; }
    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }

    /// Recompose h = gamma1 + gamma2 j.
    static constexpr Quaternion from_complex_pair(Complex gamma1, Complex gamma2) {
        return {gamma1.real(), gamma1.imag(), gamma2.real(), gamma2.imag()};
    }

    constexpr double real() const { return h0; }

    constexpr Quaternion &operator+=(const Quaternion &o) {
        h0 += o.h0;
        h1 += o.h1;
        h2 += o.h2;
        h3 += o.h3;
        return *this;
    }
    constexpr Quaternion &operator-=(const Quaternion &o) {
        h0 -= o.h0;
        h1 -= o.h1;
        h2 -= o.h2;
        h3 -= o.h3;
        return *this;
    }
    constexpr Quaternion &operator*=(double s) {
        h0 *= s;
        h1 *= s;
        h2 *= s;
        h3 *= s;
        return *this;
    }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion &b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion &b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion &a) { return {-a.h0, -a.h1, -a.h2, -a.h3}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion &a, const Quaternion &b) {
    return {
        a.h0 * b.h0 - a.h1 * b.h1 - a.h2 * b.h2 - a.h3 * b.h3,
        a.h0 * b.h1 + a.h1 * b.h0 + a.h2 * b.h3 - a.h3 * b.h2,
        a.h0 * b.h2 + a.h2 * b.h0 - a.h1 * b.h3 + a.h3 * b.h1,
        a.h0 * b.h3 + a.h3 * b.h0 + a.h1 * b.h2 - a.h2 * b.h1,
    };
}

constexpr bool operator==(const Quaternion &a, const Quaternion &b) {
    return a.h0 == b.h0 && a.h1 == b.h1 && a.h2 == b.h2 && a.h3 == b.h3;
}

constexpr Quaternion conj(const Quaternion &h) { return {h.h0, -h.h1, -h.h2, -h.h3}; }

/// |h|^2 = h conj(h).
constexpr double norm_squared(const Quaternion &h) {
    return h.h0 * h.h0 + h.h1 * h.h1 + h.h2 * h.h2 + h.h3 * h.h3;
}

double abs(const Quaternion &h);

/// conj(h) / |h|^2. Throws DomainError for h == 0.
Quaternion inverse(const Quaternion &h);

/// Largest componentwise absolute difference.
double max_component_diff(const Quaternion &a, const Quaternion &b);

/// Split h = gamma1 + gamma2 j with gamma1 = h0 + i h1 and gamma2 = h2 + i h3.
constexpr std::pair<Complex, Complex> complex_pair(const Quaternion &h) {
    return {Complex(h.h0, h.h1), Complex(h.h2, h.h3)};
}

/// The isomorphism Sp(1) -> SU(2), phi -> [[g1, g2], [-conj(g2), conj(g1)]].
///
/// Throws DomainError unless | |phi| - 1 | <= tolerance.
CMatrix sp1_to_su2(const Quaternion &phi, double tolerance = 1e-9);

std::ostream &operator<<(std::ostream &out, const Quaternion &h);

}  // namespace quatsim

#endif
