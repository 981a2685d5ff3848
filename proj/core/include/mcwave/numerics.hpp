// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The mcwave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mcwave {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Complex> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Complex> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::span<const Complex> data() const noexcept { return data_; }
    std::span<Complex> data() noexcept { return data_; }

    ComplexVector apply(std::span<const Complex> x) const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix adjoint() const;

    /// Copy of the square block starting at (offset, offset).
    ComplexMatrix diagonal_block(std::size_t offset, std::size_t size) const;

    double max_abs_diff(const ComplexMatrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Compressed-row view of a matrix whose structural zeros are exact zeros.
class SparseMatrix {
public:
    struct Entry {
        std::size_t col;
        Complex value;
    };

    SparseMatrix() = default;
    static SparseMatrix from_dense(const ComplexMatrix& dense);

    std::size_t rows() const noexcept { return row_start_.empty() ? 0 : row_start_.size() - 1; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonzeros() const noexcept { return entries_.size(); }

    std::span<const Entry> row(std::size_t r) const {
        return {entries_.data() + row_start_[r], row_start_[r + 1] - row_start_[r]};
    }

    ComplexVector apply(std::span<const Complex> x) const;

private:
    std::size_t cols_ = 0;
    std::vector<std::size_t> row_start_;
    std::vector<Entry> entries_;
};

enum class TransformDirection { Forward, Inverse };

/// Unitary DFT (1/sqrt(n) scaling, e^{-j2pi kn/n} kernel).
ComplexVector dft(std::span<const Complex> x, std::size_t size);
ComplexVector idft(std::span<const Complex> x, std::size_t size);

/// Reference O(n^2) route for the same transforms.
ComplexVector dft_dense(std::span<const Complex> x, std::size_t size);
ComplexVector idft_dense(std::span<const Complex> x, std::size_t size);

/// Materialized unitary DFT matrix F_n.
ComplexMatrix dft_matrix(std::size_t n);

/// (F_N (x) I_M) x for Forward, (F_N^H (x) I_M) x for Inverse, with x = vec of an M x N array
/// (column n holds entries [n*M, (n+1)*M)).
ComplexVector doppler_transform(std::span<const Complex> x, std::size_t M, std::size_t N,
                                TransformDirection direction);

/// F G F^H for square G, computed with column and row FFTs.
ComplexMatrix conjugate_by_dft(const ComplexMatrix& g);

/// Kronecker product A (x) B.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double norm(std::span<const Complex> x);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace mcwave
