// Copyright 2026 The kwitness authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "kwitness/errors.hpp"

namespace kwitness {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense complex matrix with row-major storage. The universal numerical
/// carrier of the library; sized for desk-scale problems (<= ~100x100),
/// so all operations are plain loops with no blocking or sparsity.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);
    /// Matrix unit: single 1 at (i, j), zero elsewhere.
    static ComplexMatrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
    /// Rank-one outer product v w^dagger.
    static ComplexMatrix outer(const ComplexVector& v, const ComplexVector& w);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Complex>& data() { return data_; }
    const std::vector<Complex>& data() const { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    Complex trace() const;
    double frobenius_norm() const;
    /// Largest entry magnitude (max norm).
    double max_abs() const;
    /// max |A - A^dagger| entrywise; requires a square matrix.
    double hermiticity_defect() const;
    bool is_hermitian(double tol = 1e-10) const { return hermiticity_defect() <= tol; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    /// A * v for a column vector v.
    ComplexVector apply(const ComplexVector& v) const;

    /// Largest entrywise difference |A - B|.
    double max_diff(const ComplexMatrix& other) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

// Small vector helpers used throughout the library.
double vector_norm(const ComplexVector& v);
/// Conjugate-linear in the first argument: sum conj(a_i) b_i.
Complex inner_product(const ComplexVector& a, const ComplexVector& b);
void normalize(ComplexVector& v);

}  // namespace kwitness
