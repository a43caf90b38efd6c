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

#ifndef QUATSIM_QMATRIX_HPP
#define QUATSIM_QMATRIX_HPP

#include <cstddef>
#include <vector>

#include "quatsim/quaternion.hpp"

namespace quatsim {

/// Element of the right module H^d. Scalars act from the right.
class QVector {
  public:
    QVector() = default;
    explicit QVector(std::size_t dim);
    explicit QVector(std::vector<Quaternion> entries);

    std::size_t dim() const { return data_.size(); }
    Quaternion &operator[](std::size_t r) { return data_[r]; }
    const Quaternion &operator[](std::size_t r) const { return data_[r]; }
    const std::vector<Quaternion> &entries() const { return data_; }

    QVector &operator+=(const QVector &o);
    QVector &operator-=(const QVector &o);

  private:
    std::vector<Quaternion> data_;
};

QVector operator+(QVector a, const QVector &b);
QVector operator-(QVector a, const QVector &b);
/// Right scalar action: (phi h)_r = phi_r h.
QVector operator*(const QVector &phi, const Quaternion &h);

/// Symplectic inner product <phi|chi> = sum_r conj(phi_r) chi_r.
Quaternion inner_product(const QVector &phi, const QVector &chi);
double norm(const QVector &phi);

/// Dense row-major p x d quaternionic matrix acting on H^d from the left.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries);

    static QMatrix identity(std::size_t n);
    /// Real diagonal matrix.
    static QMatrix diagonal(const std::vector<double> &values);
    /// Matrix whose columns are the given vectors (all of equal dim).
    static QMatrix from_columns(const std::vector<QVector> &columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Quaternion &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Quaternion &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Quaternion> &entries() const { return data_; }
    QVector column(std::size_t c) const;

    QMatrix &operator+=(const QMatrix &o);
    QMatrix &operator-=(const QMatrix &o);
    QMatrix &operator*=(double s);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Quaternion> data_;
};

QMatrix operator+(QMatrix a, const QMatrix &b);
QMatrix operator-(QMatrix a, const QMatrix &b);
QMatrix operator*(QMatrix a, double s);
QMatrix operator*(double s, QMatrix a);

/// [AB]_rt = sum_s A_rs B_st, products taken in that order.
QMatrix operator*(const QMatrix &a, const QMatrix &b);
QVector operator*(const QMatrix &a, const QVector &phi);

/// [A*]_rs = conj(A_sr).
QMatrix adjoint(const QMatrix &a);

/// Re(sum_r <e_r|A e_r>) in the standard basis.
double trace(const QMatrix &a);

/// sqrt(sum |A_rs|^2); equals sqrt(tr(A^2)) on self-adjoint input.
double frobenius_norm(const QMatrix &a);
double max_abs_diff(const QMatrix &a, const QMatrix &b);

/// |phi> lambda <phi|, entry (r, s) = phi_r lambda conj(phi_s).
QMatrix outer(const QVector &phi, double lambda = 1.0);

/// max |A - A*| <= tolerance * max(1, |A|).
bool is_self_adjoint(const QMatrix &a, double tolerance = 1e-9);

/// The real inner product (A, B) = tr(AB) on self-adjoint matrices.
/// Throws DomainError if either operand is not self-adjoint.
double hs_form(const QMatrix &a, const QMatrix &b);

/// Orthonormal basis of the d(2d-1)-dimensional real space of self-adjoint
/// d x d quaternionic matrices: unit diagonals first, then for each r < s
/// the matrices (E_rs q + E_sr conj(q)) / sqrt(2), q = 1, i, j, k.
std::vector<QMatrix> sa_basis(std::size_t d);

}  // namespace quatsim

#endif
