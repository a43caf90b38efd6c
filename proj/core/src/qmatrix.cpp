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

#include "quatsim/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "quatsim/error.hpp"

namespace quatsim {

namespace {

void require_same_shape(const QMatrix &a, const QMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream msg;
        msg << op << ": shape " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
        throw DimensionError(msg.str());
    }
}

void require_same_dim(const QVector &a, const QVector &b, const char *op) {
    if (a.dim() != b.dim()) {
        std::ostringstream msg;
        msg << op << ": dimension " << a.dim() << " vs " << b.dim();
        throw DimensionError(msg.str());
    }
}

}  // namespace

QVector::QVector(std::size_t dim) : data_(dim) {}

QVector::QVector(std::vector<Quaternion> entries) : data_(std::move(entries)) {}

QVector &QVector::operator+=(const QVector &o) {
    require_same_dim(*this, o, "add");
    for (std::size_t r = 0; r < data_.size(); ++r) {
        data_[r] += o.data_[r];
    }
    return *this;
}

QVector &QVector::operator-=(const QVector &o) {
    require_same_dim(*this, o, "subtract");
    for (std::size_t r = 0; r < data_.size(); ++r) {
        data_[r] -= o.data_[r];
    }
    return *this;
}

QVector operator+(QVector a, const QVector &b) { return a += b; }
QVector operator-(QVector a, const QVector &b) { return a -= b; }

QVector operator*(const QVector &phi, const Quaternion &h) {
    QVector out(phi.dim());
    for (std::size_t r = 0; r < phi.dim(); ++r) {
        out[r] = phi[r] * h;
    }
    return out;
}

Quaternion inner_product(const QVector &phi, const QVector &chi) {
    require_same_dim(phi, chi, "inner_product");
    Quaternion acc;
    for (std::size_t r = 0; r < phi.dim(); ++r) {
        acc += conj(phi[r]) * chi[r];
    }
    return acc;
}

double norm(const QVector &phi) {
    double s = 0.0;
    for (const auto &h : phi.entries()) {
        s += norm_squared(h);
    }
    return std::sqrt(s);
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw DimensionError("QMatrix: entry count does not match shape");
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        m(r, r) = 1.0;
    }
    return m;
}

QMatrix QMatrix::diagonal(const std::vector<double> &values) {
    QMatrix m(values.size(), values.size());
    for (std::size_t r = 0; r < values.size(); ++r) {
        m(r, r) = values[r];
    }
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector> &columns) {
    if (columns.empty()) {
        return {};
    }
    const std::size_t rows = columns.front().dim();
    QMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].dim() != rows) {
            throw DimensionError("from_columns: columns differ in dimension");
        }
        for (std::size_t r = 0; r < rows; ++r) {
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

QVector QMatrix::column(std::size_t c) const {
    QVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

QMatrix &QMatrix::operator+=(const QMatrix &o) {
    require_same_shape(*this, o, "add");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += o.data_[k];
    }
    return *this;
}

QMatrix &QMatrix::operator-=(const QMatrix &o) {
    require_same_shape(*this, o, "subtract");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= o.data_[k];
    }
    return *this;
}

QMatrix &QMatrix::operator*=(double s) {
    for (auto &h : data_) {
        h *= s;
    }
    return *this;
}

QMatrix operator+(QMatrix a, const QMatrix &b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix &b) { return a -= b; }
QMatrix operator*(QMatrix a, double s) { return a *= s; }
QMatrix operator*(double s, QMatrix a) { return a *= s; }

QMatrix operator*(const QMatrix &a, const QMatrix &b) {
    if (a.cols() != b.rows()) {
        std::ostringstream msg;
        msg << "multiply: inner dimensions " << a.cols() << " and " << b.rows() << " differ";
        throw DimensionError(msg.str());
    }
    QMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t s = 0; s < a.cols(); ++s) {
            const Quaternion &ars = a(r, s);
            for (std::size_t t = 0; t < b.cols(); ++t) {
                out(r, t) += ars * b(s, t);
            }
        }
    }
    return out;
}

QVector operator*(const QMatrix &a, const QVector &phi) {
    if (a.cols() != phi.dim()) {
        throw DimensionError("matrix-vector multiply: dimension mismatch");
    }
    QVector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t s = 0; s < a.cols(); ++s) {
            out[r] += a(r, s) * phi[s];
        }
    }
    return out;
}

QMatrix adjoint(const QMatrix &a) {
    QMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(c, r) = conj(a(r, c));
        }
    }
    return out;
}

double trace(const QMatrix &a) {
    if (!a.is_square()) {
        throw DimensionError("trace of a non-square matrix");
    }
    double t = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        t += a(r, r).real();
    }
    return t;
}

double frobenius_norm(const QMatrix &a) {
    double s = 0.0;
    for (const auto &h : a.entries()) {
        s += norm_squared(h);
    }
    return std::sqrt(s);
}

double max_abs_diff(const QMatrix &a, const QMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        m = std::max(m, abs(a.entries()[k] - b.entries()[k]));
    }
    return m;
}

QMatrix outer(const QVector &phi, double lambda) {
    QMatrix out(phi.dim(), phi.dim());
    for (std::size_t r = 0; r < phi.dim(); ++r) {
        for (std::size_t s = 0; s < phi.dim(); ++s) {
            out(r, s) = phi[r] * conj(phi[s]) * lambda;
        }
    }
    return out;
}

bool is_self_adjoint(const QMatrix &a, double tolerance) {
    if (!a.is_square()) {
        return false;
    }
    double bound = tolerance * std::max(1.0, frobenius_norm(a));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = r; c < a.cols(); ++c) {
            if (abs(a(r, c) - conj(a(c, r))) > bound) {
                return false;
            }
        }
    }
    return true;
}

double hs_form(const QMatrix &a, const QMatrix &b) {
    if (!is_self_adjoint(a) || !is_self_adjoint(b)) {
        throw DomainError("hs_form: operands must be self-adjoint");
    }
    if (a.rows() != b.rows()) {
        throw DimensionError("hs_form: dimension mismatch");
    }
    // tr(AB) = Re sum_{r,s} A_rs B_sr without forming the product.
    double t = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t s = 0; s < a.cols(); ++s) {
            t += (a(r, s) * b(s, r)).real();
        }
    }
    return t;
}

std::vector<QMatrix> sa_basis(std::size_t d) {
    std::vector<QMatrix> basis;
    basis.reserve(d * (2 * d - 1));
    for (std::size_t r = 0; r < d; ++r) {
        QMatrix e(d, d);
        e(r, r) = 1.0;
        basis.push_back(std::move(e));
    }
    const double w = 1.0 / std::sqrt(2.0);
    const Quaternion units[] = {Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t s = r + 1; s < d; ++s) {
            for (const auto &q : units) {
                QMatrix e(d, d);
                e(r, s) = q * w;
                e(s, r) = conj(q) * w;
                basis.push_back(std::move(e));
            }
        }
    }
    return basis;
}

}  // namespace quatsim
