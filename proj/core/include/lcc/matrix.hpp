#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "lcc/errors.hpp"

namespace lcc {

using Vector = std::vector<double>;

// Dense row-major matrix of doubles. Problem sizes in this library are small
// (design matrices with at most a few hundred columns), so no sparse or
// blocked storage is provided.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<double> row(std::size_t i) {
        return {data_.data() + i * cols_, cols_};
    }

    const std::vector<double>& data() const { return data_; }

    // A * v
    Vector multiply(const Vector& v) const {
        if (v.size() != cols_) throw DimensionMismatch("multiply: vector length != cols");
        Vector out(rows_, 0.0);
        for (std::size_t i = 0; i < rows_; ++i) {
            const double* r = data_.data() + i * cols_;
            double acc = 0.0;
            for (std::size_t j = 0; j < cols_; ++j) acc += r[j] * v[j];
            out[i] = acc;
        }
        return out;
    }

    // A' * v
    Vector transpose_multiply(const Vector& v) const {
        if (v.size() != rows_) throw DimensionMismatch("transpose_multiply: vector length != rows");
        Vector out(cols_, 0.0);
        for (std::size_t i = 0; i < rows_; ++i) {
            const double* r = data_.data() + i * cols_;
            const double vi = v[i];
            for (std::size_t j = 0; j < cols_; ++j) out[j] += r[j] * vi;
        }
        return out;
    }

    // A' diag(w) A, accumulated on the upper triangle and mirrored.
    // Pass an empty w for the plain Gram matrix A'A.
    Matrix weighted_gram(const Vector& w) const {
        if (!w.empty() && w.size() != rows_)
            throw DimensionMismatch("weighted_gram: weight length != rows");
        Matrix g(cols_, cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            const double* r = data_.data() + i * cols_;
            const double wi = w.empty() ? 1.0 : w[i];
            for (std::size_t j = 0; j < cols_; ++j) {
                const double wrj = wi * r[j];
                double* grow = &g(j, 0);
                for (std::size_t k = j; k < cols_; ++k) grow[k] += wrj * r[k];
            }
        }
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t k = j + 1; k < cols_; ++k) g(k, j) = g(j, k);
        return g;
    }

    static Matrix hcat(const Matrix& a, const Matrix& b) {
        if (a.rows() != b.rows()) throw DimensionMismatch("hcat: row counts differ");
        Matrix out(a.rows(), a.cols() + b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            auto dst = out.row(i);
            auto ra = a.row(i);
            auto rb = b.row(i);
            for (std::size_t j = 0; j < ra.size(); ++j) dst[j] = ra[j];
            for (std::size_t j = 0; j < rb.size(); ++j) dst[ra.size() + j] = rb[j];
        }
        return out;
    }

    double max_asymmetry() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                worst = std::max(worst, std::fabs((*this)(i, j) - (*this)(j, i)));
        return worst;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline double inf_norm(const Vector& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

}  // namespace lcc
