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

#include <cstddef>
#include <vector>

#include "kwitness/complex_matrix.hpp"

namespace kwitness::linalg {

/// Dimensions of a bipartite system; the left (A) factor is the slow index,
/// so an operator on the composite space has row index i * dim_b + s.
struct BipartiteShape {
    std::size_t dim_a;
    std::size_t dim_b;

    BipartiteShape(std::size_t m, std::size_t n);
    std::size_t total() const { return dim_a * dim_b; }
};

enum class Subsystem { A, B };

/// Spectral decomposition of a Hermitian matrix. Eigenvalues are sorted in
/// descending order; column i of `eigenvectors` pairs with eigenvalues[i]
/// and the columns are orthonormal.
struct EigenResult {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Kronecker product: out[(i*rB + k), (j*cB + l)] = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Sweeps run until the off-diagonal Frobenius mass falls below
/// 1e-14 * ||A||_F. Throws NotHermitian if max|A - A^dagger| > 1e-10.
EigenResult hermitian_eig(const ComplexMatrix& a);

/// Eigenvalues only; same contract as hermitian_eig.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

/// Singular values, descending. Computed as square roots of the spectrum of
/// the smaller Gram matrix A^dagger A or A A^dagger.
std::vector<double> singular_values(const ComplexMatrix& a);

/// Sum of the k largest singular values. Throws BadRank unless
/// 1 <= k <= min(rows, cols).
double ky_fan_norm(const ComplexMatrix& a, std::size_t k);

/// Transpose on subsystem A: block (i,j) of the result is block (j,i) of x.
ComplexMatrix partial_transpose(const ComplexMatrix& x, const BipartiteShape& shape);

/// Trace out the complement of `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& x, const BipartiteShape& shape, Subsystem keep);

/// Singular values of the dim_a x dim_b reshaping of v, descending. The
/// count of values above 1e-10 * ||v|| is the Schmidt rank of v.
std::vector<double> schmidt_coefficients(const ComplexVector& v, const BipartiteShape& shape);

}  // namespace kwitness::linalg
