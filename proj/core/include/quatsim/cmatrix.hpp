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

#ifndef QUATSIM_CMATRIX_HPP
#define QUATSIM_CMATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace quatsim {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(const std::vector<double> &values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Complex> &entries() const { return data_; }

    CMatrix &operator+=(const CMatrix &o);
    CMatrix &operator-=(const CMatrix &o);
    CMatrix &operator*=(Complex s);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

CMatrix operator+(CMatrix a, const CMatrix &b);
CMatrix operator-(CMatrix a, const CMatrix &b);
CMatrix operator*(CMatrix a, Complex s);
CMatrix operator*(Complex s, CMatrix a);
CMatrix operator*(const CMatrix &a, const CMatrix &b);

CMatrix adjoint(const CMatrix &a);
CMatrix conjugate(const CMatrix &a);
CMatrix transpose(const CMatrix &a);

/// Full complex trace. Throws DimensionError for non-square input.
Complex trace(const CMatrix &a);

double frobenius_norm(const CMatrix &a);
/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

/// max |M - M*| <= tolerance * max(1, ||M||_F).
bool is_hermitian(const CMatrix &m, double tolerance = 1e-9);

struct HermitianEig {
    std::vector<double> eigenvalues;  // ascending
    CMatrix eigenvectors;             // column r pairs with eigenvalues[r]
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Sweeps until the off-diagonal Frobenius mass is at most
/// 1e-12 * ||M||_F; throws NumericalError after 100 sweeps. Throws
/// DomainError if `m` is not Hermitian within 1e-9 * max(1, ||M||_F).
HermitianEig hermitian_eig(const CMatrix &m);

}  // namespace quatsim

#endif
