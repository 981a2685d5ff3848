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

#include "mcwave/numerics.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mcwave/errors.hpp"

namespace mcwave {

namespace {

void check_length(std::span<const Complex> x, std::size_t size, const char* op) {
    if (size == 0) throw DimensionError(std::string(op) + ": transform size must be positive");
    if (x.size() != size) {
        throw DimensionError(std::string(op) + ": input length " + std::to_string(x.size()) +
                             " != transform size " + std::to_string(size));
    }
}

// Eigen's FFT keeps a per-instance plan cache; one instance per thread keeps calls reentrant.
Eigen::FFT<double>& fft_engine() {
    thread_local Eigen::FFT<double> engine = [] {
        Eigen::FFT<double> e;
        e.SetFlag(Eigen::FFT<double>::Unscaled);
        return e;
    }();
    return engine;
}

void fft_into(const Complex* src, Complex* dst, std::size_t n, TransformDirection dir) {
    if (n == 1) {
        // kissfft has no length-1 plan
        dst[0] = src[0];
        return;
    }
    auto& engine = fft_engine();
    const auto len = static_cast<Eigen::Index>(n);
    if (dir == TransformDirection::Forward) {
        engine.fwd(dst, src, len);
    } else {
        engine.inv(dst, src, len);
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) dst[i] *= scale;
}

ComplexVector dense_transform(std::span<const Complex> x, std::size_t n, double sign) {
    ComplexVector out(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            // Reduce the phase index mod n before scaling to keep the argument small.
            const auto idx = static_cast<double>((k * i) % n);
            const double ang = sign * 2.0 * std::numbers::pi * idx / static_cast<double>(n);
            acc += x[i] * Complex(std::cos(ang), std::sin(ang));
        }
        out[k] = acc * scale;
    }
    return out;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexVector ComplexMatrix::apply(std::span<const Complex> x) const {
    if (x.size() != cols_) {
        throw DimensionError("ComplexMatrix::apply: vector length " + std::to_string(x.size()) +
                             " != cols " + std::to_string(cols_));
    }
    ComplexVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const Complex* a = data_.data() + r * cols_;
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < cols_; ++c) acc += a[c] * x[c];
        y[r] = acc;
    }
    return y;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("ComplexMatrix::operator*: inner dimensions differ");
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex a = (*this)(r, k);
            if (a == Complex{0.0, 0.0}) continue;
            const Complex* b = rhs.data_.data() + k * rhs.cols_;
            Complex* o = out.data_.data() + r * rhs.cols_;
            for (std::size_t c = 0; c < rhs.cols_; ++c) o[c] += a * b[c];
        }
    }
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("ComplexMatrix::operator+=: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::diagonal_block(std::size_t offset, std::size_t size) const {
    if (offset + size > rows_ || offset + size > cols_) throw DimensionError("diagonal_block: out of range");
    ComplexMatrix out(size, size);
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) out(r, c) = (*this)(offset + r, offset + c);
    return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("max_abs_diff: shape mismatch");
    return mcwave::max_abs_diff(data_, other.data_);
}

SparseMatrix SparseMatrix::from_dense(const ComplexMatrix& dense) {
    SparseMatrix s;
    s.cols_ = dense.cols();
    s.row_start_.reserve(dense.rows() + 1);
    s.row_start_.push_back(0);
    for (std::size_t r = 0; r < dense.rows(); ++r) {
        const auto row = dense.row(r);
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] != Complex{0.0, 0.0}) s.entries_.push_back({c, row[c]});
        }
        s.row_start_.push_back(s.entries_.size());
    }
    return s;
}

ComplexVector SparseMatrix::apply(std::span<const Complex> x) const {
    if (x.size() != cols_) throw DimensionError("SparseMatrix::apply: vector length mismatch");
    ComplexVector y(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        Complex acc{0.0, 0.0};
        for (const auto& e : row(r)) acc += e.value * x[e.col];
        y[r] = acc;
    }
    return y;
}

ComplexVector dft(std::span<const Complex> x, std::size_t size) {
    check_length(x, size, "dft");
    ComplexVector out(size);
    fft_into(x.data(), out.data(), size, TransformDirection::Forward);
    return out;
}

ComplexVector idft(std::span<const Complex> x, std::size_t size) {
    check_length(x, size, "idft");
    ComplexVector out(size);
    fft_into(x.data(), out.data(), size, TransformDirection::Inverse);
    return out;
}

ComplexVector dft_dense(std::span<const Complex> x, std::size_t size) {
    check_length(x, size, "dft_dense");
    return dense_transform(x, size, -1.0);
}

ComplexVector idft_dense(std::span<const Complex> x, std::size_t size) {
    check_length(x, size, "idft_dense");
    return dense_transform(x, size, +1.0);
}

ComplexMatrix dft_matrix(std::size_t n) {
    if (n == 0) throw DimensionError("dft_matrix: size must be positive");
    ComplexMatrix f(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const double ang = -2.0 * std::numbers::pi * static_cast<double>((k * i) % n) / static_cast<double>(n);
            f(k, i) = Complex(std::cos(ang), std::sin(ang)) * scale;
        }
    }
    return f;
}

ComplexVector doppler_transform(std::span<const Complex> x, std::size_t M, std::size_t N,
                                TransformDirection direction) {
    if (M == 0 || N == 0) throw DimensionError("doppler_transform: M and N must be positive");
    if (x.size() != M * N) {
        throw DimensionError("doppler_transform: length " + std::to_string(x.size()) + " != M*N = " +
                             std::to_string(M * N));
    }
    ComplexVector out(x.size());
    ComplexVector column(N);
    ComplexVector spectrum(N);
    for (std::size_t m = 0; m < M; ++m) {
        for (std::size_t n = 0; n < N; ++n) column[n] = x[n * M + m];
        fft_into(column.data(), spectrum.data(), N, direction);
        for (std::size_t n = 0; n < N; ++n) out[n * M + m] = spectrum[n];
    }
    return out;
}

ComplexMatrix conjugate_by_dft(const ComplexMatrix& g) {
    if (g.rows() != g.cols() || g.rows() == 0) throw DimensionError("conjugate_by_dft: matrix must be square");
    const std::size_t n = g.rows();
    // Row pass: each row times F^H, i.e. an inverse DFT of the row (F is symmetric).
    ComplexMatrix tmp(n, n);
    for (std::size_t r = 0; r < n; ++r) fft_into(g.row(r).data(), tmp.row(r).data(), n, TransformDirection::Inverse);
    // Column pass: F applied to each column.
    ComplexMatrix out(n, n);
    ComplexVector col(n);
    ComplexVector res(n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) col[r] = tmp(r, c);
        fft_into(col.data(), res.data(), n, TransformDirection::Forward);
        for (std::size_t r = 0; r < n; ++r) out(r, c) = res[r];
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

double norm(std::span<const Complex> x) {
    double acc = 0.0;
    for (const auto& v : x) acc += std::norm(v);
    return std::sqrt(acc);
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) throw DimensionError("max_abs_diff: length mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace mcwave
