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

#include "kwitness/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace kwitness {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t rows, std::size_t cols, std::size_t i,
                                  std::size_t j) {
    if (i >= rows || j >= cols) {
        throw ShapeMismatch("matrix unit index out of range");
    }
    ComplexMatrix m(rows, cols);
    m(i, j) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::outer(const ComplexVector& v, const ComplexVector& w) {
    ComplexMatrix m(v.size(), w.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < w.size(); ++j) {
            m(i, j) = v[i] * std::conj(w[j]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out = *this;
    for (auto& z : out.data_) {
        z = std::conj(z);
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) {
        throw ShapeMismatch("trace requires a square matrix");
    }
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double s = 0.0;
    for (const auto& z : data_) {
        s = std::max(s, std::abs(z));
    }
    return s;
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) {
        throw ShapeMismatch("hermiticity defect requires a square matrix");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return d;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw ShapeMismatch("matrix addition shape mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw ShapeMismatch("matrix subtraction shape mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& z : data_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeMismatch("matrix product shape mismatch");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexVector ComplexMatrix::apply(const ComplexVector& v) const {
    if (v.size() != cols_) {
        throw ShapeMismatch("matrix-vector product shape mismatch");
    }
    ComplexVector out(rows_, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < rows_; ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) {
            s += (*this)(i, j) * v[j];
        }
        out[i] = s;
    }
    return out;
}

double ComplexMatrix::max_diff(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw ShapeMismatch("matrix comparison shape mismatch");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        d = std::max(d, std::abs(data_[i] - other.data_[i]));
    }
    return d;
}

double vector_norm(const ComplexVector& v) {
    double s = 0.0;
    for (const auto& z : v) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

Complex inner_product(const ComplexVector& a, const ComplexVector& b) {
    if (a.size() != b.size()) {
        throw ShapeMismatch("inner product shape mismatch");
    }
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

void normalize(ComplexVector& v) {
    const double n = vector_norm(v);
    if (n == 0.0) {
        throw Error("cannot normalize the zero vector");
    }
    for (auto& z : v) {
        z /= n;
    }
}

}  // namespace kwitness
