// Copyright (c) 2026 evoprune contributors
// SPDX-License-Identifier: Apache-2.0
//
// Row-major dense matrix. Double precision throughout: the Hessian path
// requires 64-bit accumulation and the toy scale makes a separate 32-bit
// forward path not worth the surface area.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace evoprune {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* row(std::size_t r) { return data_.data() + r * cols_; }
    const double* row(std::size_t r) const { return data_.data() + r * cols_; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    std::span<const double> values() const { return data_; }
    std::span<double> values() { return data_; }

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// C = A * B. Throws ShapeError on inner-dimension mismatch.
Matrix matmul(const Matrix& a, const Matrix& b);

// C = A * B^T. The hot path for activations times (out x in) weights.
Matrix matmul_nt(const Matrix& a, const Matrix& b);

// C = A^T * B. Gradient accumulation (sum of row outer products).
Matrix matmul_tn(const Matrix& a, const Matrix& b);

// C += A^T * B, in place.
void add_matmul_tn(Matrix& c, const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

// Rows/columns gathered by index lists (indices must be in range).
Matrix gather_cols(const Matrix& a, std::span<const std::size_t> cols);
Matrix gather_rows(const Matrix& a, std::span<const std::size_t> rows);
Matrix gather(const Matrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

double frobenius_norm_sq(const Matrix& a);

// Throws NumericalError when a contains NaN or Inf; context names the tensor.
void check_finite(const Matrix& a, const char* context);

}  // namespace evoprune
