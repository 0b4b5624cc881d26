#include "eigenhodge/verifier/torus_package.hpp"

namespace eigenhodge::verifier {

using exterior::KahlerExterior;

namespace {

// Copies the (from -> to) block of a per-mode operator into a component
// matrix whose blocks hold `modes` consecutive copies of each exterior block.
void put(ExactMatrix& dst, const ExactMatrix& full, const exterior::GradedBasis& basis, Bidegree from, Bidegree to,
         std::size_t mode_from, std::size_t mode_to, const GaussianRational& scale) {
    const auto rf = basis.bidegree_range(from);
    const auto rt = basis.bidegree_range(to);
    for (std::size_t r = 0; r < rt.size; ++r) {
        for (std::size_t c = 0; c < rf.size; ++c) {
            const auto& x = full(rt.offset + r, rf.offset + c);
            if (!x.is_zero()) dst(mode_to * rt.size + r, mode_from * rf.size + c) = scale * x;
        }
    }
}

}  // namespace

std::vector<Component> torus_components(const torus::TorusSpec& t, const std::vector<torus::SpectralLine>& lines) {
    const int n = t.n();
    const KahlerExterior ext(n);
    const auto& basis = ext.basis();
    const auto order = bidegree_order(n);
    const GaussianRational i = GaussianRational::i();
    const GaussianRational one(1);

    std::size_t modes_total = 0;
    for (const auto& line : lines) modes_total += line.mode_count();
    KahlerPackage shape;
    shape.n = n;
    for (auto b : order) shape.dims[b] = modes_total * basis.dim(b);
    const Layout global_layout(shape);
    std::map<Bidegree, std::size_t> cursor;
    for (auto b : order) cursor[b] = global_layout.range(b).offset;

    std::vector<Component> out;
    for (const auto& line : lines) {
        for (auto [a, b] : line.pairs) {
            std::vector<const torus::DualVector*> modes{&line.modes[a]};
            if (a != b) modes.push_back(&line.modes[b]);
            const std::size_t m = modes.size();

            KahlerPackage pkg;
            pkg.n = n;
            for (auto bd : order) pkg.dims[bd] = m * basis.dim(bd);
            for (auto bd : order) {
                pkg.gram[bd] = ExactMatrix::scalar(pkg.dims[bd], GaussianRational(std::int64_t{1} << bd.degree()));
            }
            auto target_dim = [&](Bidegree bd) { return (bd.p <= n && bd.q <= n) ? pkg.dims[bd] : 0; };
            for (auto bd : order) {
                pkg.partial[bd] = ExactMatrix(target_dim(partial_target(bd)), pkg.dims[bd]);
                pkg.dbar[bd] = ExactMatrix(target_dim(dbar_target(bd)), pkg.dims[bd]);
                pkg.lefschetz[bd] = ExactMatrix(target_dim(lefschetz_target(bd)), pkg.dims[bd]);
                pkg.conj[bd] = ExactMatrix(target_dim(conj_target(bd)), pkg.dims[bd]);
            }
            for (std::size_t k = 0; k < m; ++k) {
                auto ops = torus::mode_operators(t, *modes[k], ext);
                for (auto bd : order) {
                    if (bd.p < n) put(pkg.partial[bd], ops.P, basis, bd, partial_target(bd), k, k, i);
                    if (bd.q < n) put(pkg.dbar[bd], ops.Q, basis, bd, dbar_target(bd), k, k, i);
                    if (bd.p < n && bd.q < n) put(pkg.lefschetz[bd], ext.L(), basis, bd, lefschetz_target(bd), k, k, one);
                    put(pkg.conj[bd], ext.conj(), basis, bd, conj_target(bd), k, m - 1 - k, one);
                }
            }

            std::vector<std::size_t> global;
            for (auto bd : order) {
                for (std::size_t j = 0; j < pkg.dims[bd]; ++j) global.push_back(cursor[bd]++);
            }
            for (auto& c : split_components(pkg, global)) out.push_back(std::move(c));
        }
    }
    sort_components(out);
    return out;
}

KahlerPackage torus_package(const torus::TorusSpec& t, const std::vector<torus::SpectralLine>& lines) {
    return merge_components(t.n(), torus_components(t, lines));
}

}  // namespace eigenhodge::verifier
