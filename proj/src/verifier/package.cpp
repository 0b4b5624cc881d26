#include "eigenhodge/verifier/package.hpp"

#include <algorithm>
#include <numeric>

namespace eigenhodge::verifier {

std::size_t KahlerPackage::dim(Bidegree b) const {
    auto it = dims.find(b);
    return it == dims.end() ? 0 : it->second;
}

std::size_t KahlerPackage::total_dim() const {
    std::size_t total = 0;
    for (const auto& [b, d] : dims) total += d;
    return total;
}

Bidegree partial_target(Bidegree b) { return {b.p + 1, b.q}; }
Bidegree dbar_target(Bidegree b) { return {b.p, b.q + 1}; }
Bidegree lefschetz_target(Bidegree b) { return {b.p + 1, b.q + 1}; }
Bidegree conj_target(Bidegree b) { return {b.q, b.p}; }

namespace {

bool in_range(int n, Bidegree b) { return b.p >= 0 && b.q >= 0 && b.p <= n && b.q <= n; }

void check_family(const KahlerPackage& pkg, const BlockMap& blocks, Bidegree (*target)(Bidegree),
                  const char* name) {
    for (const auto& [src, m] : blocks) {
        const Bidegree dst = target(src);
        const std::string where = std::string(name) + " block " + src.to_string();
        if (!in_range(pkg.n, src)) throw Error(ErrorKind::ShapeMismatch, where + " is outside the bigrading");
        const std::size_t rows = in_range(pkg.n, dst) ? pkg.dim(dst) : 0;
        if (m.rows() != rows || m.cols() != pkg.dim(src)) {
            throw Error(ErrorKind::ShapeMismatch, where + " is " + std::to_string(m.rows()) + "x" +
                                                      std::to_string(m.cols()) + ", expected " +
                                                      std::to_string(rows) + "x" + std::to_string(pkg.dim(src)));
        }
    }
}

Bidegree identity_target(Bidegree b) { return b; }

}  // namespace

void KahlerPackage::check_shapes() const {
    if (n < 0) throw Error(ErrorKind::ShapeMismatch, "n must be nonnegative");
    for (const auto& [b, d] : dims) {
        if (!in_range(n, b) && d != 0) {
            throw Error(ErrorKind::ShapeMismatch, "dims entry " + b.to_string() + " is outside the bigrading");
        }
    }
    check_family(*this, gram, identity_target, "gram");
    check_family(*this, partial, partial_target, "partial");
    check_family(*this, dbar, dbar_target, "dbar");
    check_family(*this, lefschetz, lefschetz_target, "L");
    check_family(*this, conj, conj_target, "conj");
}

std::vector<Bidegree> bidegree_order(int n) {
    std::vector<Bidegree> out;
    for (int k = 0; k <= 2 * n; ++k) {
        for (int p = std::min(k, n); p >= std::max(0, k - n); --p) out.push_back({p, k - p});
    }
    return out;
}

Layout::Layout(const KahlerPackage& pkg) : n_(pkg.n) {
    for (auto b : bidegree_order(pkg.n)) {
        ranges_[b] = {total_, pkg.dim(b)};
        total_ += pkg.dim(b);
    }
}

IndexRange Layout::range(Bidegree b) const {
    auto it = ranges_.find(b);
    if (it == ranges_.end()) return {total_, 0};
    return it->second;
}

IndexRange Layout::degree_range(int k) const {
    if (k < 0 || k > 2 * n_) return {k < 0 ? 0 : total_, 0};
    const auto first = range({std::min(k, n_), k - std::min(k, n_)});
    const auto last = range({std::max(0, k - n_), k - std::max(0, k - n_)});
    return {first.offset, last.offset + last.size - first.offset};
}

Bidegree Layout::bidegree_of(std::size_t index) const {
    for (const auto& [b, r] : ranges_) {
        if (index >= r.offset && index < r.offset + r.size) return b;
    }
    throw Error(ErrorKind::DimensionMismatch, "index " + std::to_string(index) + " outside the total space");
}

namespace {

void place(ExactMatrix& total, const Layout& layout, const BlockMap& blocks, Bidegree (*target)(Bidegree)) {
    for (const auto& [src, m] : blocks) {
        if (m.empty()) continue;
        total.set_block(layout.range(target(src)).offset, layout.range(src).offset, m);
    }
}

}  // namespace

DerivedOperators derive(const KahlerPackage& pkg) {
    pkg.check_shapes();
    DerivedOperators ops;
    ops.layout = Layout(pkg);
    const std::size_t total = ops.layout.total();

    std::vector<HermitianGram> blocks;
    for (auto b : bidegree_order(pkg.n)) {
        auto it = pkg.gram.find(b);
        if (it == pkg.gram.end()) {
            blocks.push_back(HermitianGram::identity(pkg.dim(b)));
        } else {
            try {
                blocks.push_back(HermitianGram::certify(it->second));
            } catch (const Error& e) {
                throw Error(e.kind(), "gram block " + b.to_string() + ": " + e.what());
            }
        }
    }
    std::vector<const HermitianGram*> ptrs;
    for (const auto& g : blocks) ptrs.push_back(&g);
    ops.gram = HermitianGram::direct_sum(ptrs);

    for (auto* m : {&ops.P, &ops.Q, &ops.L, &ops.C, &ops.H}) *m = ExactMatrix(total, total);
    place(ops.P, ops.layout, pkg.partial, partial_target);
    place(ops.Q, ops.layout, pkg.dbar, dbar_target);
    place(ops.L, ops.layout, pkg.lefschetz, lefschetz_target);
    place(ops.C, ops.layout, pkg.conj, conj_target);
    for (std::size_t i = 0; i < total; ++i) {
        ops.H(i, i) = GaussianRational(pkg.n - ops.layout.bidegree_of(i).degree());
    }

    ops.D = ops.P + ops.Q;
    ops.P_adj = adjoint_wrt(ops.P, ops.gram, ops.gram);
    ops.Q_adj = adjoint_wrt(ops.Q, ops.gram, ops.gram);
    ops.D_adj = ops.P_adj + ops.Q_adj;
    ops.Lambda = adjoint_wrt(ops.L, ops.gram, ops.gram);
    ops.laplacian = ops.D * ops.D_adj + ops.D_adj * ops.D;
    return ops;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

void couple(UnionFind& uf, const Layout& layout, const BlockMap& blocks, Bidegree (*target)(Bidegree)) {
    for (const auto& [src, m] : blocks) {
        const auto from = layout.range(src).offset;
        const auto to = layout.range(target(src)).offset;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (!m(r, c).is_zero()) uf.unite(to + r, from + c);
            }
        }
    }
}

void restrict_family(const BlockMap& in, BlockMap& out, Bidegree (*target)(Bidegree),
                     const std::map<Bidegree, std::vector<std::size_t>>& members) {
    static const std::vector<std::size_t> none;
    auto lookup = [&](Bidegree b) -> const std::vector<std::size_t>& {
        auto it = members.find(b);
        return it == members.end() ? none : it->second;
    };
    for (const auto& [src, m] : in) {
        const auto& cols = lookup(src);
        const auto& rows = lookup(target(src));
        if (cols.empty()) continue;
        ExactMatrix sub(rows.size(), cols.size());
        bool any = false;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const auto& x = m(rows[r], cols[c]);
                if (!x.is_zero()) {
                    sub(r, c) = x;
                    any = true;
                }
            }
        }
        if (any) out[src] = std::move(sub);
    }
}

}  // namespace

std::vector<Component> split_components(const KahlerPackage& pkg, const std::vector<std::size_t>& global) {
    pkg.check_shapes();
    const Layout layout(pkg);
    const std::size_t total = layout.total();
    if (!global.empty() && global.size() != total) {
        throw Error(ErrorKind::DimensionMismatch, "global index map does not match the package");
    }
    UnionFind uf(total);
    couple(uf, layout, pkg.gram, identity_target);
    couple(uf, layout, pkg.partial, partial_target);
    couple(uf, layout, pkg.dbar, dbar_target);
    couple(uf, layout, pkg.lefschetz, lefschetz_target);
    couple(uf, layout, pkg.conj, conj_target);

    // Roots are the smallest member of each class.
    std::map<std::size_t, std::map<Bidegree, std::vector<std::size_t>>> classes;
    for (auto b : bidegree_order(pkg.n)) {
        const auto r = layout.range(b);
        for (std::size_t i = 0; i < r.size; ++i) classes[uf.find(r.offset + i)][b].push_back(i);
    }

    std::vector<Component> out;
    for (auto& [root, members] : classes) {
        Component c;
        c.package.n = pkg.n;
        for (auto b : bidegree_order(pkg.n)) {
            auto it = members.find(b);
            if (it == members.end()) continue;
            c.package.dims[b] = it->second.size();
            for (auto i : it->second) {
                const std::size_t idx = layout.range(b).offset + i;
                c.global.push_back(global.empty() ? idx : global[idx]);
                c.global_block.push_back(b);
            }
        }
        // Gram blocks are kept even when diagonal so that weights survive.
        for (const auto& [src, m] : pkg.gram) {
            auto it = members.find(src);
            if (it == members.end()) continue;
            const auto& idx = it->second;
            ExactMatrix sub(idx.size(), idx.size());
            for (std::size_t r = 0; r < idx.size(); ++r) {
                for (std::size_t s = 0; s < idx.size(); ++s) sub(r, s) = m(idx[r], idx[s]);
            }
            c.package.gram[src] = std::move(sub);
        }
        restrict_family(pkg.partial, c.package.partial, partial_target, members);
        restrict_family(pkg.dbar, c.package.dbar, dbar_target, members);
        restrict_family(pkg.lefschetz, c.package.lefschetz, lefschetz_target, members);
        restrict_family(pkg.conj, c.package.conj, conj_target, members);
        out.push_back(std::move(c));
    }
    sort_components(out);
    return out;
}

void sort_components(std::vector<Component>& components) {
    auto least = [](const Component& c) {
        return c.global.empty() ? std::size_t(-1) : *std::min_element(c.global.begin(), c.global.end());
    };
    std::stable_sort(components.begin(), components.end(),
                     [&](const Component& a, const Component& b) { return least(a) < least(b); });
}

KahlerPackage merge_components(int n, const std::vector<Component>& components) {
    KahlerPackage out;
    out.n = n;
    for (const auto& c : components) {
        for (const auto& [b, d] : c.package.dims) out.dims[b] += d;
    }
    const Layout layout(out);
    // Position of each local coordinate inside its global block.
    auto positions = [&](const Component& c) {
        std::map<Bidegree, std::vector<std::size_t>> pos;
        for (std::size_t i = 0; i < c.global.size(); ++i) {
            const Bidegree b = c.global_block[i];
            const auto r = layout.range(b);
            if (c.global[i] < r.offset || c.global[i] >= r.offset + r.size) {
                throw Error(ErrorKind::DimensionMismatch, "component coordinate outside its global block");
            }
            pos[b].push_back(c.global[i] - r.offset);
        }
        return pos;
    };
    auto scatter = [&](BlockMap& dst, const BlockMap& src, Bidegree (*target)(Bidegree),
                       const std::map<Bidegree, std::vector<std::size_t>>& pos, bool identity_default) {
        for (const auto& [b, m] : src) {
            auto [it, fresh] = dst.try_emplace(b);
            auto& big = it->second;
            if (fresh) {
                const Bidegree t = target(b);
                const std::size_t rows = (t.p <= n && t.q <= n) ? out.dim(t) : 0;
                big = identity_default ? ExactMatrix::identity(out.dim(b)) : ExactMatrix(rows, out.dim(b));
            }
            const auto& cols = pos.at(b);
            auto rit = pos.find(target(b));
            for (std::size_t r = 0; r < m.rows(); ++r) {
                for (std::size_t s = 0; s < m.cols(); ++s) big(rit->second[r], cols[s]) = m(r, s);
            }
        }
    };
    for (const auto& c : components) {
        const auto pos = positions(c);
        scatter(out.gram, c.package.gram, identity_target, pos, true);
        scatter(out.partial, c.package.partial, partial_target, pos, false);
        scatter(out.dbar, c.package.dbar, dbar_target, pos, false);
        scatter(out.lefschetz, c.package.lefschetz, lefschetz_target, pos, false);
        scatter(out.conj, c.package.conj, conj_target, pos, false);
    }
    return out;
}

}  // namespace eigenhodge::verifier
