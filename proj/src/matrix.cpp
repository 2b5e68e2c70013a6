// Copyright (c) 2026 evoprune contributors
// SPDX-License-Identifier: Apache-2.0

#include "evoprune/matrix.hpp"

#include <cmath>
#include <string>

#include "evoprune/errors.hpp"

namespace evoprune {

namespace {

void require(bool cond, const char* what) {
    if (!cond) {
        throw ShapeError(what);
    }
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "matmul: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    const std::size_t n = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* arow = a.row(i);
        double* crow = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = arow[k];
            if (aik == 0.0) {
                continue;
            }
            const double* brow = b.row(k);
            for (std::size_t j = 0; j < n; ++j) {
                crow[j] += aik * brow[j];
            }
        }
    }
    return c;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.cols(), "matmul_nt: inner dimensions differ");
    Matrix c(a.rows(), b.rows());
    const std::size_t k = a.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* arow = a.row(i);
        double* crow = c.row(i);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            const double* brow = b.row(j);
            double acc = 0.0;
            for (std::size_t t = 0; t < k; ++t) {
                acc += arow[t] * brow[t];
            }
            crow[j] = acc;
        }
    }
    return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
    Matrix c(a.cols(), b.cols());
    add_matmul_tn(c, a, b);
    return c;
}

void add_matmul_tn(Matrix& c, const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), "matmul_tn: row counts differ");
    require(c.rows() == a.cols() && c.cols() == b.cols(), "matmul_tn: bad output shape");
    const std::size_t n = b.cols();
    for (std::size_t t = 0; t < a.rows(); ++t) {
        const double* arow = a.row(t);
        const double* brow = b.row(t);
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const double ati = arow[i];
            if (ati == 0.0) {
                continue;
            }
            double* crow = c.row(i);
            for (std::size_t j = 0; j < n; ++j) {
                crow[j] += ati * brow[j];
            }
        }
    }
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            t(j, i) = a(i, j);
        }
    }
    return t;
}

Matrix gather_cols(const Matrix& a, std::span<const std::size_t> cols) {
    Matrix out(a.rows(), cols.size());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* arow = a.row(i);
        double* orow = out.row(i);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            orow[j] = arow[cols[j]];
        }
    }
    return out;
}

Matrix gather_rows(const Matrix& a, std::span<const std::size_t> rows) {
    Matrix out(rows.size(), a.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double* arow = a.row(rows[i]);
        double* orow = out.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            orow[j] = arow[j];
        }
    }
    return out;
}

Matrix gather(const Matrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    Matrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double* arow = a.row(rows[i]);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out(i, j) = arow[cols[j]];
        }
    }
    return out;
}

double frobenius_norm_sq(const Matrix& a) {
    double acc = 0.0;
    for (double v : a.values()) {
        acc += v * v;
    }
    return acc;
}

void check_finite(const Matrix& a, const char* context) {
    for (double v : a.values()) {
        if (!std::isfinite(v)) {
            throw NumericalError(std::string("non-finite value in ") + context);
        }
    }
}

}  // namespace evoprune
