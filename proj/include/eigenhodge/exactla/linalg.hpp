#pragma once

#include <cstddef>
#include <vector>

#include "eigenhodge/errors.hpp"
#include "eigenhodge/exactla/matrix.hpp"

namespace eigenhodge {

inline Rational real_part(const Rational& x) { return x; }
inline Rational real_part(const GaussianRational& z) { return z.re(); }
inline bool is_real(const Rational&) { return true; }
inline bool is_real(const GaussianRational& z) { return z.is_real(); }

template <ExactField F>
struct RowEchelon {
    Matrix<F> reduced;                // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination over the field; pivots on the first nonzero entry.
template <ExactField F>
RowEchelon<F> rref(Matrix<F> m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!m(i, c).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        if (pivot != r) {
            for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
        }
        F inv = F(1) / m(r, c);
        if (!(inv == F(1))) {
            for (std::size_t j = c; j < cols; ++j) {
                if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
            }
        }
        std::vector<std::size_t> support;
        for (std::size_t j = c; j < cols; ++j) {
            if (!m(r, j).is_zero()) support.push_back(j);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            F factor = m(i, c);
            for (auto j : support) m(i, j) -= factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
    if (m.empty()) return 0;
    // Eliminate along the shorter side.
    if (m.rows() > m.cols()) return rref(m.transpose()).pivots.size();
    return rref(m).pivots.size();
}

/// Right-kernel basis as columns of a cols x nullity matrix. Each vector has
/// its first nonzero coordinate equal to 1.
template <ExactField F>
Matrix<F> kernel_matrix(const Matrix<F>& m) {
    const std::size_t cols = m.cols();
    if (m.rows() == 0) return Matrix<F>::identity(cols);
    auto ech = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    Matrix<F> basis(cols, cols - ech.pivots.size());
    std::size_t out = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        basis(f, out) = F(1);
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
            const F& x = ech.reduced(r, f);
            if (!x.is_zero()) basis(ech.pivots[r], out) = -x;
        }
        std::size_t lead = 0;
        while (basis(lead, out).is_zero()) ++lead;
        if (!basis(lead, out).is_one()) {
            F inv = F(1) / basis(lead, out);
            for (std::size_t i = lead; i < cols; ++i) {
                if (!basis(i, out).is_zero()) basis(i, out) = basis(i, out) * inv;
            }
        }
        ++out;
    }
    return basis;
}

template <ExactField F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
    Matrix<F> k = kernel_matrix(m);
    std::vector<std::vector<F>> out;
    out.reserve(k.cols());
    for (std::size_t j = 0; j < k.cols(); ++j) out.push_back(k.column(j));
    return out;
}

/// The maximal linearly independent prefix-greedy subset of the columns of m.
template <ExactField F>
Matrix<F> column_basis(const Matrix<F>& m) {
    if (m.empty()) return Matrix<F>(m.rows(), 0);
    auto ech = rref(m);
    return m.select_columns(ech.pivots);
}

/// Inverse of a square matrix; throws SingularBasis when singular.
template <ExactField F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    auto ech = rref(Matrix<F>::hstack(m, Matrix<F>::identity(n)));
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) {
        throw Error(ErrorKind::SingularBasis, "matrix is singular");
    }
    return ech.reduced.block(0, n, n, n);
}

template <ExactField F>
struct Ldlt {
    Matrix<F> lower;              // unit lower triangular
    std::vector<Rational> pivots;  // diagonal of D
};

/// g = L diag(D) L^H for conjugate-symmetric g. Throws NotHermitian or
/// NotPositiveDefinite (the first non-positive pivot).
template <ExactField F>
Ldlt<F> ldlt(const Matrix<F>& g) {
    if (!g.is_square()) throw Error(ErrorKind::NotHermitian, "Gram matrix is not square");
    const std::size_t n = g.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_real(g(i, i))) throw Error(ErrorKind::NotHermitian, "non-real diagonal entry");
        for (std::size_t j = 0; j < i; ++j) {
            if (!(g(i, j) == conj(g(j, i)))) {
                throw Error(ErrorKind::NotHermitian,
                            "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not conjugate-symmetric");
            }
        }
    }
    Matrix<F> lower = Matrix<F>::identity(n);
    std::vector<Rational> d(n);
    for (std::size_t j = 0; j < n; ++j) {
        F acc = g(j, j);
        for (std::size_t k = 0; k < j; ++k) {
            if (!lower(j, k).is_zero()) acc -= lower(j, k) * conj(lower(j, k)) * F(d[k]);
        }
        d[j] = real_part(acc);
        if (d[j].sign() <= 0) {
            throw Error(ErrorKind::NotPositiveDefinite,
                        "pivot " + std::to_string(j) + " is " + d[j].to_string());
        }
        for (std::size_t i = j + 1; i < n; ++i) {
            F s = g(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                if (!lower(i, k).is_zero() && !lower(j, k).is_zero()) {
                    s -= lower(i, k) * conj(lower(j, k)) * F(d[k]);
                }
            }
            if (!s.is_zero()) lower(i, j) = s / F(d[j]);
        }
    }
    return {std::move(lower), std::move(d)};
}

/// A certified positive-definite conjugate-symmetric Gram matrix.
class HermitianGram {
public:
    HermitianGram() = default;

    /// Verifies conjugate symmetry and positive definiteness via ldlt.
    static HermitianGram certify(ExactMatrix g);
    static HermitianGram identity(std::size_t n);
    /// Block-diagonal sum of already certified blocks.
    static HermitianGram direct_sum(const std::vector<const HermitianGram*>& blocks);

    std::size_t dim() const { return matrix_.rows(); }
    const ExactMatrix& matrix() const { return matrix_; }
    const ExactMatrix& inverse() const { return inverse_; }
    bool diagonal() const { return diagonal_; }

    /// <x, y> = y^H G x (linear in the first slot).
    GaussianRational inner(const std::vector<GaussianRational>& x, const std::vector<GaussianRational>& y) const;

private:
    HermitianGram(ExactMatrix g, ExactMatrix inv, bool diagonal)
        : matrix_(std::move(g)), inverse_(std::move(inv)), diagonal_(diagonal) {}

    ExactMatrix matrix_;
    ExactMatrix inverse_;
    bool diagonal_ = true;
};

/// The adjoint A of m : (domain, g_domain) -> (codomain, g_codomain), i.e.
/// <m x, y>_codomain = <x, A y>_domain, computed as g_domain^-1 m^H g_codomain.
ExactMatrix adjoint_wrt(const ExactMatrix& m, const HermitianGram& g_domain, const HermitianGram& g_codomain);

}  // namespace eigenhodge
