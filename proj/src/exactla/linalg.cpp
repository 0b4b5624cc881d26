#include "eigenhodge/exactla/linalg.hpp"

namespace eigenhodge {

HermitianGram HermitianGram::certify(ExactMatrix g) {
    ldlt(g);
    bool diag = g.is_diagonal();
    ExactMatrix inv;
    if (diag) {
        inv = ExactMatrix(g.rows(), g.cols());
        for (std::size_t i = 0; i < g.rows(); ++i) inv(i, i) = g(i, i).reciprocal();
    } else {
        inv = eigenhodge::inverse(g);
    }
    return HermitianGram(std::move(g), std::move(inv), diag);
}

HermitianGram HermitianGram::identity(std::size_t n) {
    return HermitianGram(ExactMatrix::identity(n), ExactMatrix::identity(n), true);
}

HermitianGram HermitianGram::direct_sum(const std::vector<const HermitianGram*>& blocks) {
    std::size_t total = 0;
    bool diag = true;
    for (const auto* b : blocks) {
        total += b->dim();
        diag = diag && b->diagonal_;
    }
    ExactMatrix g(total, total);
    ExactMatrix inv(total, total);
    std::size_t off = 0;
    for (const auto* b : blocks) {
        g.set_block(off, off, b->matrix_);
        inv.set_block(off, off, b->inverse_);
        off += b->dim();
    }
    return HermitianGram(std::move(g), std::move(inv), diag);
}

GaussianRational HermitianGram::inner(const std::vector<GaussianRational>& x,
                                      const std::vector<GaussianRational>& y) const {
    if (x.size() != dim() || y.size() != dim()) {
        throw Error(ErrorKind::DimensionMismatch, "inner product length mismatch");
    }
    GaussianRational acc;
    for (std::size_t r = 0; r < dim(); ++r) {
        if (y[r].is_zero()) continue;
        GaussianRational row;
        for (std::size_t c = 0; c < dim(); ++c) {
            if (!matrix_(r, c).is_zero() && !x[c].is_zero()) row += matrix_(r, c) * x[c];
        }
        acc += y[r].conj() * row;
    }
    return acc;
}

ExactMatrix adjoint_wrt(const ExactMatrix& m, const HermitianGram& g_domain, const HermitianGram& g_codomain) {
    if (m.rows() != g_codomain.dim() || m.cols() != g_domain.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "adjoint_wrt: Gram sizes do not match the operator");
    }
    if (g_domain.diagonal() && g_codomain.diagonal()) {
        ExactMatrix a(m.cols(), m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                const auto& x = m(r, c);
                if (x.is_zero()) continue;
                a(c, r) = x.conj() * g_codomain.matrix()(r, r) * g_domain.inverse()(c, c);
            }
        }
        return a;
    }
    return g_domain.inverse() * (m.adjoint() * g_codomain.matrix());
}

}  // namespace eigenhodge
