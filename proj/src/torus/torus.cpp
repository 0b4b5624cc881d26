#include "eigenhodge/torus/torus.hpp"

#include <algorithm>
#include <map>

namespace eigenhodge::torus {

using exterior::Bidegree;
using exterior::binomial;

TorusSpec::TorusSpec(int n, RationalMatrix basis) : n_(n), basis_(std::move(basis)) {
    const auto dim = static_cast<std::size_t>(2 * n);
    if (n < 1) throw Error(ErrorKind::SingularBasis, "complex dimension must be at least 1");
    if (basis_.rows() != dim || basis_.cols() != dim) {
        throw Error(ErrorKind::SingularBasis, "basis must be " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    try {
        ldlt(gram());
    } catch (const Error& e) {
        throw Error(ErrorKind::SingularBasis, std::string("degenerate lattice: ") + e.what());
    }
}

TorusSpec TorusSpec::standard(int n) { return TorusSpec(n, RationalMatrix::identity(static_cast<std::size_t>(2 * n))); }

bool DualVector::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
}

std::size_t SpectralLine::b(int n, int k) const { return modes.size() * binomial(2 * n, k); }

std::size_t SpectralLine::h(int n, Bidegree bd) const {
    return modes.size() * binomial(n, bd.p) * binomial(n, bd.q);
}

RationalMatrix dual_lattice(const TorusSpec& t) { return inverse(t.basis()).transpose(); }

DualVector make_dual_vector(const TorusSpec& t, const RationalMatrix& dual, std::vector<std::int64_t> coeffs) {
    DualVector v;
    const std::size_t dim = dual.rows();
    v.real_coords.assign(dim, Rational());
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if (coeffs[c] != 0 && !dual(r, c).is_zero()) v.real_coords[r] += dual(r, c) * Rational(coeffs[c]);
        }
    }
    for (int j = 0; j < t.n(); ++j) {
        v.covector.w.emplace_back(v.real_coords[static_cast<std::size_t>(2 * j)],
                                  v.real_coords[static_cast<std::size_t>(2 * j + 1)]);
    }
    for (const auto& x : v.real_coords) v.norm_sq += x * x;
    v.coeffs = std::move(coeffs);
    return v;
}

namespace {

struct Enumerator {
    const Ldlt<Rational>& f;
    std::vector<std::int64_t> coeffs;
    std::vector<std::vector<std::int64_t>> found;

    // Chooses coeffs[i] given coeffs[i+1..]; `budget` bounds the remaining
    // sum_{j<=i} D_j (c_j + t_j)^2.
    void descend(std::size_t i, const Rational& budget) {
        const std::size_t m = coeffs.size();
        Rational shift;
        for (std::size_t j = i + 1; j < m; ++j) {
            if (coeffs[j] != 0 && !f.lower(j, i).is_zero()) shift += f.lower(j, i) * Rational(coeffs[j]);
        }
        const Rational& d = f.pivots[i];
        auto cost = [&](std::int64_t c) {
            Rational y = Rational(c) + shift;
            return d * y * y;
        };
        // Nearest integer to -shift minimises the cost; the feasible set is an
        // interval around it.
        const std::int64_t center = (Rational(1, 2) - shift).floor();
        auto visit = [&](std::int64_t c) {
            Rational spent = cost(c);
            if (spent > budget) return false;
            coeffs[i] = c;
            if (i == 0) {
                found.push_back(coeffs);
            } else {
                descend(i - 1, budget - spent);
            }
            return true;
        };
        for (std::int64_t c = center; visit(c); ++c) {
        }
        for (std::int64_t c = center - 1; visit(c); --c) {
        }
        coeffs[i] = 0;
    }
};

}  // namespace

std::vector<SpectralLine> enumerate_modes(const TorusSpec& t, const Rational& mu_max) {
    if (mu_max.sign() < 0) throw Error(ErrorKind::ParseError, "mu_max must be nonnegative");
    const RationalMatrix dual = dual_lattice(t);
    const RationalMatrix dual_gram = dual.transpose() * dual;
    const auto f = ldlt(dual_gram);

    Enumerator e{f, std::vector<std::int64_t>(dual.cols(), 0), {}};
    e.descend(dual.cols() - 1, mu_max);

    std::map<Rational, std::vector<DualVector>> grouped;
    for (auto& c : e.found) {
        DualVector v = make_dual_vector(t, dual, std::move(c));
        grouped[v.norm_sq].push_back(std::move(v));
    }

    std::vector<SpectralLine> lines;
    for (auto& [mu, modes] : grouped) {
        SpectralLine line;
        line.mu = mu;
        std::sort(modes.begin(), modes.end(),
                  [](const DualVector& a, const DualVector& b) { return a.coeffs < b.coeffs; });
        line.modes = std::move(modes);
        for (std::size_t i = 0; i < line.modes.size(); ++i) {
            const auto& c = line.modes[i].coeffs;
            auto lead = std::find_if(c.begin(), c.end(), [](std::int64_t x) { return x != 0; });
            if (lead == c.end()) {
                line.pairs.emplace_back(i, i);
                continue;
            }
            if (*lead < 0) continue;
            std::vector<std::int64_t> neg(c.size());
            std::transform(c.begin(), c.end(), neg.begin(), [](std::int64_t x) { return -x; });
            auto it = std::lower_bound(line.modes.begin(), line.modes.end(), neg,
                                       [](const DualVector& a, const std::vector<std::int64_t>& key) {
                                           return a.coeffs < key;
                                       });
            line.pairs.emplace_back(i, static_cast<std::size_t>(it - line.modes.begin()));
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

ModeOperators mode_operators(const TorusSpec& t, const DualVector& v, const exterior::KahlerExterior& ext) {
    if (v.real_coords.size() != static_cast<std::size_t>(2 * t.n()) || ext.n() != t.n()) {
        throw Error(ErrorKind::DimensionMismatch, "dual vector does not match the torus dimension");
    }
    const auto& b = t.basis();
    for (std::size_t c = 0; c < b.cols(); ++c) {
        Rational pairing;
        for (std::size_t r = 0; r < b.rows(); ++r) pairing += b(r, c) * v.real_coords[r];
        if (!pairing.is_integer()) {
            throw Error(ErrorKind::NotInDualLattice,
                        "<b_" + std::to_string(c + 1) + ", v> = " + pairing.to_string() + " is not an integer");
        }
    }
    using exterior::WedgePart;
    ModeOperators ops;
    const auto& g = ext.gram();
    ops.D = ext.wedge(v.covector, WedgePart::Full);
    ops.P = ext.wedge(v.covector, WedgePart::Holo);
    ops.Q = ext.wedge(v.covector, WedgePart::Antiholo);
    ops.D_adj = adjoint_wrt(ops.D, g, g);
    ops.P_adj = adjoint_wrt(ops.P, g, g);
    ops.Q_adj = adjoint_wrt(ops.Q, g, g);
    ops.L = ext.L();
    ops.Lambda = ext.Lambda();
    ops.H = ext.H();
    ops.laplacian = anticommutator(ops.D, ops.D_adj);
    return ops;
}

AssembledLine assemble_line(const TorusSpec& t, const SpectralLine& line, const exterior::KahlerExterior& ext) {
    AssembledLine out;
    out.mu = line.mu;
    out.n = t.n();
    out.modes = line.modes.size();
    out.block = ext.basis().size();
    const std::size_t total = out.modes * out.block;
    for (auto* m : {&out.D, &out.D_adj, &out.P, &out.P_adj, &out.Q, &out.Q_adj, &out.L, &out.Lambda, &out.H,
                    &out.laplacian, &out.conj}) {
        *m = ExactMatrix(total, total);
    }
    for (std::size_t k = 0; k < out.modes; ++k) {
        auto ops = mode_operators(t, line.modes[k], ext);
        const std::size_t off = k * out.block;
        out.D.set_block(off, off, ops.D);
        out.D_adj.set_block(off, off, ops.D_adj);
        out.P.set_block(off, off, ops.P);
        out.P_adj.set_block(off, off, ops.P_adj);
        out.Q.set_block(off, off, ops.Q);
        out.Q_adj.set_block(off, off, ops.Q_adj);
        out.L.set_block(off, off, ops.L);
        out.Lambda.set_block(off, off, ops.Lambda);
        out.H.set_block(off, off, ops.H);
        out.laplacian.set_block(off, off, ops.laplacian);
    }
    for (auto [a, b] : line.pairs) {
        out.conj.set_block(b * out.block, a * out.block, ext.conj());
        if (a != b) out.conj.set_block(a * out.block, b * out.block, ext.conj());
    }
    return out;
}

namespace {

LabeledSubspace select(const AssembledLine& line, exterior::IndexRange range) {
    LabeledSubspace out;
    out.basis = ExactMatrix(line.modes * line.block, line.modes * range.size);
    std::size_t col = 0;
    for (std::size_t k = 0; k < line.modes; ++k) {
        for (std::size_t i = 0; i < range.size; ++i) {
            out.basis(k * line.block + range.offset + i, col++) = GaussianRational(1);
            out.labels.emplace_back(k, range.offset + i);
        }
    }
    return out;
}

}  // namespace

LabeledSubspace assemble_eigenspace(const AssembledLine& line, const exterior::GradedBasis& basis, int degree) {
    return select(line, basis.degree_range(degree));
}

LabeledSubspace assemble_eigenspace(const AssembledLine& line, const exterior::GradedBasis& basis,
                                    exterior::Bidegree bidegree) {
    return select(line, basis.bidegree_range(bidegree));
}

}  // namespace eigenhodge::torus
