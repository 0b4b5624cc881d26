#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eigenhodge/errors.hpp"
#include "eigenhodge/exactla/gaussian.hpp"
#include "eigenhodge/exactla/rational.hpp"

namespace eigenhodge {

template <class F>
concept ExactField = requires(F a, const F& b) {
    { a.is_zero() } -> std::convertible_to<bool>;
    { a + b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { conj(b) } -> std::convertible_to<F>;
};

/// Dense row-major matrix over an exact field. Shape is fixed at construction.
template <ExactField F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<F>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) {
                throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    static Matrix scalar(std::size_t n, const F& value) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
        return m;
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(std::size_t rows, std::span<const std::vector<F>> columns) {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) {
                throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
            }
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : data_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    bool is_diagonal() const {
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if (r != c && !(*this)(r, c).is_zero()) return false;
            }
        }
        return true;
    }

    std::size_t nonzeros() const {
        std::size_t count = 0;
        for (const auto& x : data_) count += x.is_zero() ? 0 : 1;
        return count;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        }
        return t;
    }

    Matrix conjugate() const {
        Matrix out(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) {
            if (!data_[k].is_zero()) out.data_[k] = conj(data_[k]);
        }
        return out;
    }

    /// Conjugate transpose.
    Matrix adjoint() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                const F& x = (*this)(r, c);
                if (!x.is_zero()) t(c, r) = conj(x);
            }
        }
        return t;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) {
            throw Error(ErrorKind::DimensionMismatch, "block out of range");
        }
        Matrix out(nr, nc);
        for (std::size_t r = 0; r < nr; ++r) {
            for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
        }
        return out;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
            throw Error(ErrorKind::DimensionMismatch, "block out of range");
        }
        for (std::size_t r = 0; r < b.rows_; ++r) {
            for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
        }
    }

    std::vector<F> column(std::size_t c) const {
        std::vector<F> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    Matrix select_columns(std::span<const std::size_t> which) const {
        Matrix out(rows_, which.size());
        for (std::size_t j = 0; j < which.size(); ++j) {
            for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, which[j]);
        }
        return out;
    }

    /// [a | b]
    static Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "hstack row mismatch");
        Matrix out(a.rows_, a.cols_ + b.cols_);
        out.set_block(0, 0, a);
        out.set_block(0, a.cols_, b);
        return out;
    }

    /// First column (then row) where the two matrices differ.
    std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix& other) const {
        require_same_shape(other, "compare");
        for (std::size_t c = 0; c < cols_; ++c) {
            for (std::size_t r = 0; r < rows_; ++r) {
                if (!((*this)(r, c) == other(r, c))) return std::make_pair(r, c);
            }
        }
        return std::nullopt;
    }

    Matrix& operator+=(const Matrix& rhs) {
        require_same_shape(rhs, "add");
        for (std::size_t k = 0; k < data_.size(); ++k) {
            if (!rhs.data_[k].is_zero()) data_[k] += rhs.data_[k];
        }
        return *this;
    }

    Matrix& operator-=(const Matrix& rhs) {
        require_same_shape(rhs, "subtract");
        for (std::size_t k = 0; k < data_.size(); ++k) {
            if (!rhs.data_[k].is_zero()) data_[k] -= rhs.data_[k];
        }
        return *this;
    }

    Matrix& operator*=(const F& s) {
        for (auto& x : data_) {
            if (!x.is_zero()) x = x * s;
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) { return a *= F(-1); }
    friend Matrix operator*(const F& s, Matrix a) { return a *= s; }

    /// Product that skips zero entries on both sides; the operator matrices in
    /// this project are sparse, so cost tracks the number of nonzero products.
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw Error(ErrorKind::DimensionMismatch,
                        "product of " + shape_string(a) + " and " + shape_string(b));
        }
        std::vector<std::vector<std::uint32_t>> nz(b.rows_);
        for (std::size_t k = 0; k < b.rows_; ++k) {
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) nz[k].push_back(static_cast<std::uint32_t>(j));
            }
        }
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& x = a(i, k);
                if (x.is_zero() || nz[k].empty()) continue;
                for (auto j : nz[k]) c(i, j) += x * b(k, j);
            }
        }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    static std::string shape_string(const Matrix& m) {
        return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
    }

    void require_same_shape(const Matrix& other, const char* what) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw Error(ErrorKind::DimensionMismatch,
                        std::string(what) + " of " + shape_string(*this) + " and " + shape_string(other));
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

using ExactMatrix = Matrix<GaussianRational>;
using RationalMatrix = Matrix<Rational>;

/// AB - BA
template <ExactField F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
    return a * b - b * a;
}

/// A B + B A
template <ExactField F>
Matrix<F> anticommutator(const Matrix<F>& a, const Matrix<F>& b) {
    return a * b + b * a;
}

inline ExactMatrix to_exact(const RationalMatrix& m) {
    ExactMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = GaussianRational(m(r, c));
    }
    return out;
}

}  // namespace eigenhodge
