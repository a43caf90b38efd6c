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

#include "quatsim/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "quatsim/error.hpp"

namespace quatsim {

namespace {

void require_same_shape(const CMatrix &a, const CMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream msg;
        msg << op << ": shape " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
        throw DimensionError(msg.str());
    }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw DimensionError("CMatrix: entry count does not match shape");
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        m(r, r) = 1.0;
    }
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<double> &values) {
    CMatrix m(values.size(), values.size());
    for (std::size_t r = 0; r < values.size(); ++r) {
        m(r, r) = values[r];
    }
    return m;
}

CMatrix &CMatrix::operator+=(const CMatrix &o) {
    require_same_shape(*this, o, "add");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += o.data_[k];
    }
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &o) {
    require_same_shape(*this, o, "subtract");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= o.data_[k];
    }
    return *this;
}

CMatrix &CMatrix::operator*=(Complex s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
CMatrix operator*(Complex s, CMatrix a) { return a *= s; }

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    if (a.cols() != b.rows()) {
        std::ostringstream msg;
        msg << "multiply: inner dimensions " << a.cols() << " and " << b.rows() << " differ";
        throw DimensionError(msg.str());
    }
    CMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t s = 0; s < a.cols(); ++s) {
            Complex ars = a(r, s);
            if (ars == Complex{}) {
                continue;
            }
            for (std::size_t t = 0; t < b.cols(); ++t) {
                out(r, t) += ars * b(s, t);
            }
        }
    }
    return out;
}

CMatrix adjoint(const CMatrix &a) {
    CMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(c, r) = std::conj(a(r, c));
        }
    }
    return out;
}

CMatrix conjugate(const CMatrix &a) {
    CMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) = std::conj(a(r, c));
        }
    }
    return out;
}

CMatrix transpose(const CMatrix &a) {
    CMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(c, r) = a(r, c);
        }
    }
    return out;
}

Complex trace(const CMatrix &a) {
    if (!a.is_square()) {
        throw DimensionError("trace of a non-square matrix");
    }
    Complex t{};
    for (std::size_t r = 0; r < a.rows(); ++r) {
        t += a(r, r);
    }
    return t;
}

double frobenius_norm(const CMatrix &a) {
    double s = 0.0;
    for (const auto &z : a.entries()) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return m;
}

bool is_hermitian(const CMatrix &m, double tolerance) {
    if (!m.is_square()) {
        return false;
    }
    double bound = tolerance * std::max(1.0, frobenius_norm(m));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = r; c < m.cols(); ++c) {
            if (std::abs(m(r, c) - std::conj(m(c, r))) > bound) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace quatsim
