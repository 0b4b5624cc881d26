#include "eigenhodge/exterior/operators.hpp"

#include <mutex>

namespace eigenhodge::exterior {

namespace {

int parity_sign(int count) { return (count & 1) ? -1 : 1; }

std::uint32_t below(int j) { return (1u << j) - 1u; }

}  // namespace

Rational Covector::norm_sq() const {
    Rational acc;
    for (const auto& x : w) acc += x.norm_sq();
    return acc;
}

ExactMatrix wedge_dz(const GradedBasis& basis, int j) {
    const std::uint32_t bit = 1u << j;
    ExactMatrix m(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto& e = basis.element(col);
        if (e.holo & bit) continue;
        int sign = parity_sign(__builtin_popcount(e.holo & below(j)));
        m(basis.index_of({e.holo | bit, e.antiholo}), col) = sign;
    }
    return m;
}

ExactMatrix wedge_dzbar(const GradedBasis& basis, int j) {
    const std::uint32_t bit = 1u << j;
    ExactMatrix m(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto& e = basis.element(col);
        if (e.antiholo & bit) continue;
        // dzbar_j crosses the p holomorphic factors, then the smaller dzbar's.
        int sign = parity_sign(e.p() + __builtin_popcount(e.antiholo & below(j)));
        m(basis.index_of({e.holo, e.antiholo | bit}), col) = sign;
    }
    return m;
}

namespace {

ExactMatrix wedge_from(const std::vector<ExactMatrix>& dz, const std::vector<ExactMatrix>& dzbar,
                       std::size_t dim, const Covector& theta, WedgePart part) {
    if (theta.w.size() != dz.size()) {
        throw Error(ErrorKind::DimensionMismatch, "covector length differs from the complex dimension");
    }
    const GaussianRational half(Rational(1, 2));
    ExactMatrix m(dim, dim);
    for (std::size_t j = 0; j < theta.w.size(); ++j) {
        if (theta.w[j].is_zero()) continue;
        if (part != WedgePart::Antiholo) m += (theta.w[j].conj() * half) * dz[j];
        if (part != WedgePart::Holo) m += (theta.w[j] * half) * dzbar[j];
    }
    return m;
}

}  // namespace

ExactMatrix wedge_matrix(const GradedBasis& basis, const Covector& theta, WedgePart part) {
    std::vector<ExactMatrix> dz;
    std::vector<ExactMatrix> dzbar;
    for (int j = 0; j < basis.n(); ++j) {
        dz.push_back(wedge_dz(basis, j));
        dzbar.push_back(wedge_dzbar(basis, j));
    }
    return wedge_from(dz, dzbar, basis.size(), theta, part);
}

HermitianGram gram(const GradedBasis& basis) {
    ExactMatrix g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        g(i, i) = GaussianRational(std::int64_t{1} << basis.element(i).bidegree().degree());
    }
    return HermitianGram::certify(std::move(g));
}

HermitianGram gram(const GradedBasis& basis, int degree) {
    auto range = basis.degree_range(degree);
    return HermitianGram::certify(
        ExactMatrix::scalar(range.size, GaussianRational(std::int64_t{1} << degree)));
}

HermitianGram gram(const GradedBasis& basis, Bidegree bidegree) {
    auto range = basis.bidegree_range(bidegree);
    return HermitianGram::certify(
        ExactMatrix::scalar(range.size, GaussianRational(std::int64_t{1} << bidegree.degree())));
}

ExactMatrix lefschetz_L(const GradedBasis& basis) {
    ExactMatrix m(basis.size(), basis.size());
    for (int j = 0; j < basis.n(); ++j) m += wedge_dz(basis, j) * wedge_dzbar(basis, j);
    return GaussianRational(Rational(0), Rational(1, 2)) * std::move(m);
}

ExactMatrix lefschetz_Lambda(const GradedBasis& basis) {
    auto g = gram(basis);
    return adjoint_wrt(lefschetz_L(basis), g, g);
}

ExactMatrix counting_H(const GradedBasis& basis) {
    ExactMatrix m(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        m(i, i) = GaussianRational(basis.n() - basis.element(i).bidegree().degree());
    }
    return m;
}

ExactMatrix conjugation(const GradedBasis& basis) {
    ExactMatrix m(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto& e = basis.element(col);
        m(basis.index_of({e.antiholo, e.holo}), col) = parity_sign(e.p() * e.q());
    }
    return m;
}

ExactMatrix restrict_block(const ExactMatrix& full, IndexRange from, IndexRange to) {
    return full.block(to.offset, from.offset, to.size, from.size);
}

KahlerExterior::KahlerExterior(int n)
    : basis_(n), gram_(exterior::gram(basis_)), L_(lefschetz_L(basis_)), H_(counting_H(basis_)),
      conj_(conjugation(basis_)) {
    for (int j = 0; j < n; ++j) {
        dz_.push_back(wedge_dz(basis_, j));
        dzbar_.push_back(wedge_dzbar(basis_, j));
    }
    Lambda_ = adjoint_wrt(L_, gram_, gram_);
}

ExactMatrix KahlerExterior::wedge(const Covector& theta, WedgePart part) const {
    return wedge_from(dz_, dzbar_, basis_.size(), theta, part);
}

Sl2Check check_sl2(int n) {
    KahlerExterior ext(n);
    Sl2Check out;
    out.lambda_L = commutator(ext.Lambda(), ext.L()) == ext.H();
    out.H_L = commutator(ext.H(), ext.L()) == GaussianRational(-2) * ext.L();
    out.H_Lambda = commutator(ext.H(), ext.Lambda()) == GaussianRational(2) * ext.Lambda();
    return out;
}

void self_test() {
    static std::once_flag once;
    std::call_once(once, [] {
        for (int n = 1; n <= 3; ++n) {
            if (!check_sl2(n).ok()) {
                throw std::logic_error("sl2 relations fail for n = " + std::to_string(n) +
                                       " under the fixed metric normalization");
            }
        }
    });
}

}  // namespace eigenhodge::exterior
