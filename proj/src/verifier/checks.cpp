#include "eigenhodge/verifier/checks.hpp"

#include <algorithm>
#include <set>

namespace eigenhodge::verifier {

using G = GaussianRational;

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids = {
        "T1.1", "T1.2", "T1.3", "C1.a", "C1.b", "C1.c",     "C1.d", "C1.e",   "C1.f",   "C1.g",   "L0.1",
        "L0.2", "L2.split", "T2.a", "T2.b", "T2.c", "E6", "E7", "S.union", "S.mono", "S.mid", "K.sl2",
        "K.nakano", "K.laplacians",
    };
    return ids;
}

bool is_check_id(const std::string& id) {
    const auto& ids = check_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::size_t check_rank(const std::string& id) {
    const auto& ids = check_ids();
    return static_cast<std::size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin());
}

Witness Witness::dims(std::int64_t lhs, std::int64_t rhs) {
    Witness w;
    w.kind = Kind::Dimensions;
    w.lhs = lhs;
    w.rhs = rhs;
    return w;
}

void sort_verdicts(std::vector<Verdict>& verdicts) {
    std::stable_sort(verdicts.begin(), verdicts.end(),
                     [](const Verdict& a, const Verdict& b) { return check_rank(a.id) < check_rank(b.id); });
}

std::size_t Table::at(int p, int q) const {
    if (p < 0 || q < 0 || p > n_ || q > n_) return 0;
    return cells_[static_cast<std::size_t>(p * (n_ + 1) + q)];
}

std::size_t& Table::at(int p, int q) {
    if (p < 0 || q < 0 || p > n_ || q > n_) {
        throw Error(ErrorKind::DimensionMismatch, "table index " + std::to_string(p) + "," + std::to_string(q));
    }
    return cells_[static_cast<std::size_t>(p * (n_ + 1) + q)];
}

Table& Table::operator+=(const Table& other) {
    if (other.n_ != n_ || other.cells_.size() != cells_.size()) {
        throw Error(ErrorKind::DimensionMismatch, "adding tables of different size");
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += other.cells_[i];
    return *this;
}

LineMeasurements::LineMeasurements(int n_, Rational mu_)
    : n(n_), mu(std::move(mu_)), b(static_cast<std::size_t>(2 * n_ + 1), 0), h(n_),
      stacked(b.size(), 0), conj_image(n_), conj_joint(n_), lefschetz(static_cast<std::size_t>(n_ + 1), 0),
      lefschetz_joint(lefschetz.size(), 0), split{b, b, Table(n_), Table(n_)}, d_joint(b.size(), 0),
      dbar_joint(n_), e6_rank(n_), e7_rank(n_) {}

namespace {

void add(std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "adding count vectors of different size");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

}  // namespace

LineMeasurements& LineMeasurements::operator+=(const LineMeasurements& o) {
    if (o.n != n || !(o.mu == mu)) throw Error(ErrorKind::DimensionMismatch, "adding measurements of different lines");
    add(b, o.b);
    h += o.h;
    add(stacked, o.stacked);
    conj_image += o.conj_image;
    conj_joint += o.conj_joint;
    add(lefschetz, o.lefschetz);
    add(lefschetz_joint, o.lefschetz_joint);
    dbar_on_00 += o.dbar_on_00;
    add(split.d_exact, o.split.d_exact);
    add(split.d_coexact, o.split.d_coexact);
    split.exact += o.split.exact;
    split.coexact += o.split.coexact;
    add(d_joint, o.d_joint);
    dbar_joint += o.dbar_joint;
    e6_rank += o.e6_rank;
    e7_rank += o.e7_rank;
    return *this;
}

// ---------------------------------------------------------------------------
// Identities

namespace {

Verdict identity(const char* id, std::string name, const ExactMatrix& lhs, const ExactMatrix& rhs,
                 const Component& comp) {
    Verdict v{id, std::move(name), true, {}};
    if (auto diff = lhs.first_difference(rhs)) {
        v.pass = false;
        v.witness.kind = Witness::Kind::BasisVector;
        v.witness.index = comp.global[diff->second];
        v.witness.row = comp.global[diff->first];
        v.witness.block = comp.global_block[diff->second];
    }
    return v;
}

ExactMatrix block_diagonal_part(const ExactMatrix& m, const Layout& layout) {
    ExactMatrix out(m.rows(), m.cols());
    for (auto b : bidegree_order(layout.n())) {
        const auto r = layout.range(b);
        if (r.size > 0) out.set_block(r.offset, r.offset, m.block(r.offset, r.offset, r.size, r.size));
    }
    return out;
}

struct IdentityName {
    const char* id;
    const char* name;
};

const std::vector<IdentityName>& identity_names() {
    static const std::vector<IdentityName> names = {
        {"K.laplacians", "P^2 = 0"},
        {"K.laplacians", "Q^2 = 0"},
        {"K.laplacians", "PQ + QP = 0"},
        {"K.laplacians", "[L,P] = 0"},
        {"K.laplacians", "[L,Q] = 0"},
        {"K.laplacians", "Delta = 2(PP* + P*P)"},
        {"K.laplacians", "Delta = 2(QQ* + Q*Q)"},
        {"K.laplacians", "[Delta,L] = 0"},
        {"K.laplacians", "[Delta,Lambda] = 0"},
        {"K.laplacians", "[Delta,pi_pq] = 0"},
        {"K.sl2", "[Lambda,L] = H"},
        {"K.sl2", "[H,L] = -2L"},
        {"K.sl2", "[H,Lambda] = 2Lambda"},
        {"K.nakano", "[Lambda,Q] = -iP*"},
        {"K.nakano", "[Lambda,P] = iQ*"},
        {"T1.2", "C conj(C) = 1"},
        {"T1.2", "C conj(P) = Q C"},
        {"T1.2", "C conj(L) = L C"},
    };
    return names;
}

std::vector<Verdict> passing_identities() {
    std::vector<Verdict> out;
    for (const auto& n : identity_names()) out.push_back({n.id, n.name, true, {}});
    return out;
}

}  // namespace

std::vector<Verdict> validate_component(const DerivedOperators& ops, const Component& comp) {
    const std::size_t total = ops.layout.total();
    const ExactMatrix zero(total, total);
    const ExactMatrix id = ExactMatrix::identity(total);
    const G two(2);
    const G i = G::i();
    const auto& names = identity_names();
    std::vector<ExactMatrix> lhs, rhs;
    auto push = [&](ExactMatrix a, ExactMatrix b) {
        lhs.push_back(std::move(a));
        rhs.push_back(std::move(b));
    };
    push(ops.P * ops.P, zero);
    push(ops.Q * ops.Q, zero);
    push(anticommutator(ops.P, ops.Q), zero);
    push(commutator(ops.L, ops.P), zero);
    push(commutator(ops.L, ops.Q), zero);
    push(ops.laplacian, two * anticommutator(ops.P, ops.P_adj));
    push(ops.laplacian, two * anticommutator(ops.Q, ops.Q_adj));
    push(commutator(ops.laplacian, ops.L), zero);
    push(commutator(ops.laplacian, ops.Lambda), zero);
    push(ops.laplacian, block_diagonal_part(ops.laplacian, ops.layout));
    push(commutator(ops.Lambda, ops.L), ops.H);
    push(commutator(ops.H, ops.L), G(-2) * ops.L);
    push(commutator(ops.H, ops.Lambda), two * ops.Lambda);
    push(commutator(ops.Lambda, ops.Q), -i * ops.P_adj);
    push(commutator(ops.Lambda, ops.P), i * ops.Q_adj);
    push(ops.C * ops.C.conjugate(), id);
    push(ops.C * ops.P.conjugate(), ops.Q * ops.C);
    push(ops.C * ops.L.conjugate(), ops.L * ops.C);

    std::vector<Verdict> out;
    for (std::size_t k = 0; k < names.size(); ++k) {
        out.push_back(identity(names[k].id, names[k].name, lhs[k], rhs[k], comp));
    }
    return out;
}

void merge_identity_verdicts(std::vector<Verdict>& into, const std::vector<Verdict>& more) {
    if (into.empty()) into = passing_identities();
    for (std::size_t k = 0; k < more.size() && k < into.size(); ++k) {
        if (more[k].pass) continue;
        if (into[k].pass || more[k].witness.index < into[k].witness.index) into[k] = more[k];
    }
}

std::vector<Verdict> validate_package(const KahlerPackage& pkg) {
    std::vector<Verdict> out = passing_identities();
    for (const auto& comp : split_components(pkg)) {
        merge_identity_verdicts(out, validate_component(derive(comp.package), comp));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Eigenspaces

std::vector<EigenPiece> eigen_pieces(const DerivedOperators& ops, const std::vector<Rational>* candidates,
                                     std::size_t& covered) {
    const auto& lap = ops.laplacian;
    const std::size_t total = ops.layout.total();
    covered = 0;
    std::vector<Rational> values;
    if (total == 0) return {};
    if (lap.is_diagonal()) {
        std::set<Rational> distinct;
        for (std::size_t i = 0; i < total; ++i) {
            if (!lap(i, i).is_real()) {
                throw Error(ErrorKind::NotHermitian, "Laplacian has a non-real diagonal entry");
            }
            distinct.insert(lap(i, i).re());
        }
        values.assign(distinct.begin(), distinct.end());
    } else if (candidates != nullptr) {
        values = *candidates;
    }

    std::vector<EigenPiece> out;
    for (const auto& mu : values) {
        EigenPiece piece{mu, {}};
        for (auto b : bidegree_order(ops.layout.n())) {
            const auto r = ops.layout.range(b);
            ExactMatrix shifted = lap.block(r.offset, r.offset, r.size, r.size);
            for (std::size_t j = 0; j < r.size; ++j) shifted(j, j) -= G(mu);
            ExactMatrix local = kernel_matrix(shifted);
            ExactMatrix basis(total, local.cols());
            if (local.cols() > 0) basis.set_block(r.offset, 0, local);
            covered += local.cols();
            piece.basis[b] = std::move(basis);
        }
        out.push_back(std::move(piece));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Measurements

namespace {

struct PieceView {
    const DerivedOperators& ops;
    const EigenPiece& piece;
    int n;
    std::size_t total;

    ExactMatrix block(int p, int q) const {
        if (p < 0 || q < 0 || p > n || q > n) return ExactMatrix(total, 0);
        auto it = piece.basis.find({p, q});
        return it == piece.basis.end() ? ExactMatrix(total, 0) : it->second;
    }

    ExactMatrix degree(int k) const {
        ExactMatrix out(total, 0);
        if (k < 0 || k > 2 * n) return out;
        for (auto b : bidegree_order(n)) {
            if (b.degree() == k) out = ExactMatrix::hstack(out, block(b.p, b.q));
        }
        return out;
    }
};

}  // namespace

LineMeasurements measure(const DerivedOperators& ops, const EigenPiece& piece, const ExactMatrix* omega) {
    const int n = ops.layout.n();
    LineMeasurements m(n, piece.mu);
    const PieceView v{ops, piece, n, ops.layout.total()};

    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            auto b = v.block(p, q);
            m.h.at(p, q) = b.cols();
            if (b.cols() == 0) continue;
            auto image = ops.C * b.conjugate();
            m.conj_image.at(p, q) = rank(image);
            m.conj_joint.at(p, q) = rank(ExactMatrix::hstack(v.block(q, p), image));
        }
    }
    std::vector<ExactMatrix> degrees;
    for (int k = 0; k <= 2 * n; ++k) {
        const auto r = ops.layout.degree_range(k);
        ExactMatrix shifted = ops.laplacian.block(r.offset, r.offset, r.size, r.size);
        for (std::size_t j = 0; j < r.size; ++j) shifted(j, j) -= G(piece.mu);
        m.b[static_cast<std::size_t>(k)] = r.size - rank(shifted);
        degrees.push_back(v.degree(k));
        m.stacked[static_cast<std::size_t>(k)] = rank(degrees.back());
    }
    auto deg = [&](int k) { return (k < 0 || k > 2 * n) ? ExactMatrix(v.total, 0) : degrees[static_cast<std::size_t>(k)]; };

    for (int i = 1; i <= n; ++i) {
        ExactMatrix image = deg(n - i);
        if (image.cols() == 0) continue;
        for (int j = 0; j < i; ++j) image = ops.L * image;
        m.lefschetz[static_cast<std::size_t>(i)] = rank(image);
        m.lefschetz_joint[static_cast<std::size_t>(i)] = rank(ExactMatrix::hstack(deg(n + i), image));
    }

    if (piece.mu.sign() <= 0) return m;

    m.dbar_on_00 = rank(ops.Q * v.block(0, 0));
    for (int k = 0; k <= 2 * n; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        auto exact = ops.D * deg(k - 1);
        auto coexact = ops.D_adj * deg(k + 1);
        m.split.d_exact[ku] = rank(exact);
        m.split.d_coexact[ku] = rank(coexact);
        m.d_joint[ku] = rank(ExactMatrix::hstack(exact, coexact));
    }
    const ExactMatrix& w = omega != nullptr ? *omega : ops.L;
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            auto exact = ops.Q * v.block(p, q - 1);
            auto coexact = ops.Q_adj * v.block(p, q + 1);
            m.split.exact.at(p, q) = rank(exact);
            m.split.coexact.at(p, q) = rank(coexact);
            m.dbar_joint.at(p, q) = rank(ExactMatrix::hstack(exact, coexact));
            m.e6_rank.at(p, q) = rank(ops.Q * column_basis(coexact));
            if (p + q < n) m.e7_rank.at(p, q) = rank(ops.Q_adj * (w * column_basis(exact)));
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Dimension checks

namespace {

using Count = std::int64_t;

Count c(std::size_t x) { return static_cast<Count>(x); }

Verdict eq(const char* id, std::string name, std::size_t lhs, std::size_t rhs) {
    return {id, std::move(name), lhs == rhs, Witness::dims(c(lhs), c(rhs))};
}

Verdict le(const char* id, std::string name, std::size_t lhs, std::size_t rhs) {
    return {id, std::move(name), lhs <= rhs, Witness::dims(c(lhs), c(rhs))};
}

std::string pq(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
std::string kname(int k) { return "k=" + std::to_string(k); }

std::size_t at(const std::vector<std::size_t>& v, int k) {
    return (k < 0 || static_cast<std::size_t>(k) >= v.size()) ? 0 : v[static_cast<std::size_t>(k)];
}

std::size_t degree_sum(const Table& h, int n, int k) {
    std::size_t s = 0;
    for (int p = 0; p <= n; ++p) s += h.at(p, k - p);
    return s;
}

void require_positive(const LineMeasurements& m) {
    if (m.mu.sign() <= 0) {
        throw Error(ErrorKind::ZeroEigenvalueLine, "check requires a positive eigenvalue, got mu = " + m.mu.to_string());
    }
}

}  // namespace

std::vector<Verdict> check_theorem1(const LineMeasurements& m) {
    const int n = m.n;
    std::vector<Verdict> out;
    for (int k = 0; k <= 2 * n; ++k) {
        const auto sum = degree_sum(m.h, n, k);
        out.push_back(eq("T1.1", kname(k) + " sum of h = b", sum, at(m.b, k)));
        out.push_back(eq("T1.1", kname(k) + " (p,q) parts independent", at(m.stacked, k), sum));
    }
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            out.push_back(eq("T1.2", pq(p, q) + " conj injective", m.conj_image.at(p, q), m.h.at(p, q)));
            out.push_back(eq("T1.2", pq(p, q) + " conj lands in " + pq(q, p), m.conj_joint.at(p, q), m.h.at(q, p)));
        }
    }
    for (int i = 1; i <= n; ++i) {
        const auto lo = at(m.b, n - i);
        const auto hi = at(m.b, n + i);
        const std::string name = "i=" + std::to_string(i);
        out.push_back(eq("T1.3", name + " rank L^i on E^(n-i) = b^(n-i)", at(m.lefschetz, i), lo));
        out.push_back(eq("T1.3", name + " b^(n-i) = b^(n+i)", lo, hi));
        out.push_back(eq("T1.3", name + " image inside E^(n+i)", at(m.lefschetz_joint, i), at(m.stacked, n + i)));
    }
    return out;
}

std::vector<Verdict> check_corollary1(int n, const std::vector<std::size_t>& b, const Table& h) {
    std::vector<Verdict> out;
    for (int k = 0; k <= 2 * n; ++k) out.push_back(eq("C1.a", kname(k), degree_sum(h, n, k), at(b, k)));
    for (int p = 0; p <= n; ++p) {
        for (int q = p + 1; q <= n; ++q) out.push_back(eq("C1.b", pq(p, q), h.at(p, q), h.at(q, p)));
    }
    for (int k = 1; k <= 2 * n; k += 2) {
        out.push_back({"C1.c", kname(k), at(b, k) % 2 == 0, Witness::dims(c(at(b, k)), 0)});
    }
    for (int k = 0; k < n; ++k) out.push_back(eq("C1.d", kname(k), at(b, 2 * n - k), at(b, k)));
    for (int k = 0; k < n; ++k) out.push_back(le("C1.e", kname(k), at(b, k), at(b, k + 2)));
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; p + q < n; ++q) {
            out.push_back(eq("C1.f", pq(p, q), h.at(p, q), h.at(n - p, n - q)));
            out.push_back(le("C1.g", pq(p, q), h.at(p, q), h.at(p + 1, q + 1)));
        }
    }
    return out;
}

SplitDims split_exact_coexact(const LineMeasurements& m) {
    require_positive(m);
    return m.split;
}

std::vector<Verdict> check_split(const LineMeasurements& m) {
    require_positive(m);
    const int n = m.n;
    std::vector<Verdict> out;
    for (int k = 0; k <= 2 * n; ++k) {
        const auto e = at(m.split.d_exact, k);
        const auto ce = at(m.split.d_coexact, k);
        out.push_back(eq("L2.split", kname(k) + " d-exact and d-coexact meet trivially", at(m.d_joint, k), e + ce));
        out.push_back(eq("L2.split", kname(k) + " d-exact + d-coexact = E^k", at(m.d_joint, k), at(m.b, k)));
    }
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            const auto e = m.split.exact.at(p, q);
            const auto ce = m.split.coexact.at(p, q);
            out.push_back(eq("L2.split", pq(p, q) + " dbar-exact and dbar-coexact meet trivially",
                             m.dbar_joint.at(p, q), e + ce));
            out.push_back(eq("L2.split", pq(p, q) + " dbar-exact + dbar-coexact = E^(p,q)", m.dbar_joint.at(p, q),
                             m.h.at(p, q)));
        }
    }
    return out;
}

std::vector<Verdict> check_degree0_lemma(const LineMeasurements& m) {
    require_positive(m);
    const auto h00 = m.h.at(0, 0);
    const auto b0 = at(m.b, 0);
    return {
        le("L0.1", "h^00 <= h^01", h00, m.h.at(0, 1)),
        eq("L0.1", "h^00 = b^0", h00, b0),
        eq("L0.1", "dbar injective on E^(0,0)", m.dbar_on_00, h00),
        le("L0.2", "2 b^0 <= b^1", 2 * b0, at(m.b, 1)),
    };
}

std::vector<Verdict> check_theorem2(const LineMeasurements& m) {
    require_positive(m);
    const int n = m.n;
    const auto& s = m.split;
    std::vector<Verdict> out;
    for (int k = 0; k <= 2 * n; ++k) {
        out.push_back(le("T2.a", kname(k), at(m.b, k), at(m.b, k - 1) + at(m.b, k + 1)));
    }
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; p + q < n; ++q) {
            out.push_back(le("T2.b", pq(p, q), m.h.at(p, q), m.h.at(p + 1, q) + m.h.at(p, q + 1)));
            out.push_back(le("T2.b", pq(p, q) + " via exact/coexact parts", m.h.at(p, q),
                             s.exact.at(p, q + 1) + s.coexact.at(p + 1, q)));
        }
    }
    for (int k = 0; k < n; ++k) out.push_back(le("T2.c", kname(k), at(m.b, k), at(m.b, k + 1)));
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            out.push_back(eq("E6", pq(p, q) + " coexact dim = exact dim of " + pq(p, q + 1), s.coexact.at(p, q),
                             s.exact.at(p, q + 1)));
            out.push_back(eq("E6", pq(p, q) + " dbar injective on coexact part", m.e6_rank.at(p, q),
                             s.coexact.at(p, q)));
            out.push_back(eq("E6", pq(p, q) + " dbar onto exact part of " + pq(p, q + 1), m.e6_rank.at(p, q),
                             s.exact.at(p, q + 1)));
        }
    }
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; p + q < n; ++q) {
            out.push_back(eq("E7", pq(p, q) + " dbar*(omega ^ -) injective on exact part", m.e7_rank.at(p, q),
                             s.exact.at(p, q)));
            out.push_back(le("E7", pq(p, q) + " exact dim <= coexact dim of " + pq(p + 1, q), s.exact.at(p, q),
                             s.coexact.at(p + 1, q)));
        }
    }
    return out;
}

std::vector<Verdict> check_line(const LineMeasurements& m) {
    auto out = check_theorem1(m);
    auto c1 = check_corollary1(m.n, m.b, m.h);
    out.insert(out.end(), c1.begin(), c1.end());
    if (m.mu.sign() > 0) {
        for (auto&& part : {check_degree0_lemma(m), check_split(m), check_theorem2(m)}) {
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    sort_verdicts(out);
    return out;
}

// ---------------------------------------------------------------------------
// Spectra

namespace {

using Spectrum = std::set<Rational>;

Verdict subset(const char* id, std::string name, const Spectrum& small, const Spectrum& big) {
    Verdict v{id, std::move(name), true, Witness::dims(c(small.size()), c(big.size()))};
    for (const auto& mu : small) {
        if (!big.contains(mu)) {
            v.pass = false;
            v.witness.kind = Witness::Kind::Values;
            v.witness.lhs_value = mu.to_string();
            v.witness.rhs_value = "absent";
            v.witness.at = "mu=" + mu.to_string();
            break;
        }
    }
    return v;
}

}  // namespace

std::vector<Verdict> compare_spectra(int n, const std::vector<LineDims>& lines, const std::optional<Rational>& window,
                                     const std::optional<Rational>& covered) {
    if (window && covered && *window > *covered) {
        throw Error(ErrorKind::IncompleteRange,
                    "lines are complete up to " + covered->to_string() + ", window is " + window->to_string());
    }
    std::vector<Spectrum> spec(static_cast<std::size_t>(2 * n + 1));
    for (const auto& line : lines) {
        if (line.mu.sign() <= 0) continue;
        if (window && line.mu > *window) continue;
        for (int k = 0; k <= 2 * n; ++k) {
            if (at(line.b, k) > 0) spec[static_cast<std::size_t>(k)].insert(line.mu);
        }
    }
    auto s = [&](int k) -> Spectrum {
        return (k < 0 || k > 2 * n) ? Spectrum{} : spec[static_cast<std::size_t>(k)];
    };

    std::vector<Verdict> out;
    for (int k = 0; k <= 2 * n; ++k) {
        Spectrum both = s(k - 1);
        both.merge(s(k + 1));
        out.push_back(subset("S.union", kname(k) + " spec+ within spec+(k-1) u spec+(k+1)", s(k), both));
    }
    for (int k = 0; k < n; ++k) {
        out.push_back(subset("S.mono", kname(k) + " spec+ within spec+(k+1)", s(k), s(k + 1)));
    }
    for (int k = 0; k < n; ++k) {
        const auto a = s(k);
        const auto b = s(k + 1);
        Verdict v{"S.mono", kname(k) + " lambda1(k) >= lambda1(k+1)", true, {}};
        v.witness.kind = Witness::Kind::Values;
        v.witness.lhs_value = a.empty() ? "none" : a.begin()->to_string();
        v.witness.rhs_value = b.empty() ? "none" : b.begin()->to_string();
        // An empty spectrum puts lambda1 beyond the window.
        if (!a.empty()) v.pass = !b.empty() && !(*a.begin() < *b.begin());
        out.push_back(std::move(v));
    }
    if (n >= 1) {
        out.push_back(subset("S.mid", "spec+(n-1) within spec+(n)", s(n - 1), s(n)));
        out.push_back(subset("S.mid", "spec+(n) within spec+(n-1)", s(n), s(n - 1)));
        out.push_back(subset("S.mid", "spec+(n+1) within spec+(n)", s(n + 1), s(n)));
        out.push_back(subset("S.mid", "spec+(n) within spec+(n+1)", s(n), s(n + 1)));
    }
    return out;
}

}  // namespace eigenhodge::verifier
