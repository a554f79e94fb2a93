// Dense row-major matrix of doubles; the carrier for batches, weights,
// gradients and latent codes.
#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "fedod/common.hpp"

namespace fedod {

class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
        size_t i = 0;
        for (const auto& r : rows) {
            if (r.size() != m.cols_)
                throw ContractError("Matrix::from_rows: ragged initializer");
            size_t j = 0;
            for (double v : r) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    double operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    double* row_ptr(size_t i) { return data_.data() + i * cols_; }
    const double* row_ptr(size_t i) const { return data_.data() + i * cols_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o, "operator+=");
        for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o, "operator-=");
        for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }

    Matrix& operator*=(double s) {
        for (double& v : data_) v *= s;
        return *this;
    }

    // this += s * o
    void axpy(double s, const Matrix& o) {
        require_same_shape(o, "axpy");
        for (size_t i = 0; i < data_.size(); ++i) data_[i] += s * o.data_[i];
    }

    void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

    Matrix row(size_t i) const {
        Matrix r(1, cols_);
        for (size_t j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
        return r;
    }

    Matrix rows_subset(const std::vector<size_t>& idx) const {
        Matrix r(idx.size(), cols_);
        for (size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] >= rows_) throw ContractError("Matrix::rows_subset: index out of range");
            for (size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(idx[i], j);
        }
        return r;
    }

    bool all_finite() const {
        for (double v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    void require_finite(const char* op) const {
        if (!all_finite())
            throw ContractError(std::string(op) + ": result contains non-finite values");
    }

    void require_same_shape(const Matrix& o, const char* op) const {
        if (!same_shape(o))
            throw ContractError(std::string(op) + ": shape mismatch [" + shape_str() + " vs " +
                                o.shape_str() + "]");
    }

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<double> data_;
};

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw ContractError("matmul: a.cols (" + std::to_string(a.cols()) + ") != b.rows (" +
                            std::to_string(b.rows()) + ") [a=" + a.shape_str() +
                            ", b=" + b.shape_str() + "]");
    Matrix c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        const double* arow = a.row_ptr(i);
        double* crow = c.row_ptr(i);
        for (size_t k = 0; k < a.cols(); ++k) {
            const double aik = arow[k];
            if (aik == 0.0) continue;
            const double* brow = b.row_ptr(k);
            for (size_t j = 0; j < b.cols(); ++j) crow[j] += aik * brow[j];
        }
    }
    c.require_finite("matmul");
    return c;
}

inline Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

inline Matrix operator+(Matrix a, const Matrix& b) {
    a += b;
    return a;
}

inline Matrix operator-(Matrix a, const Matrix& b) {
    a -= b;
    return a;
}

inline Matrix operator*(Matrix a, double s) {
    a *= s;
    return a;
}

inline Matrix hadamard(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "hadamard");
    Matrix c = a;
    for (size_t i = 0; i < c.data().size(); ++i) c.data()[i] *= b.data()[i];
    return c;
}

// Sum of each column as a 1 x cols matrix.
inline Matrix column_sums(const Matrix& a) {
    Matrix s(1, a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) s(0, j) += a(i, j);
    return s;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "max_abs_diff");
    double m = 0.0;
    for (size_t i = 0; i < a.data().size(); ++i)
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

}  // namespace fedod
