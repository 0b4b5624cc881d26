#include <random>

#include "doctest.h"
#include "eigenhodge/exterior/operators.hpp"

using namespace eigenhodge;
using namespace eigenhodge::exterior;

namespace {

using G = GaussianRational;

const G kHalf{Rational(1, 2)};
const G kHalfI{Rational(0), Rational(1, 2)};

std::vector<G> unit(const GradedBasis& b, FormBasisIndex e) {
    std::vector<G> v(b.size());
    v[b.index_of(e)] = G(1);
    return v;
}

std::vector<G> act(const ExactMatrix& m, const std::vector<G>& x) {
    return (m * ExactMatrix::from_columns(x.size(), std::span<const std::vector<G>>(&x, 1))).column(0);
}

Covector random_covector(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    Covector c;
    for (int j = 0; j < n; ++j) c.w.emplace_back(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    return c;
}

constexpr std::uint32_t b1 = 1u, b2 = 2u;

}  // namespace

TEST_CASE("graded basis layout") {
    for (int n = 0; n <= 4; ++n) {
        GradedBasis b(n);
        CHECK(b.size() == (std::size_t{1} << (2 * n)));
        for (int k = 0; k <= 2 * n; ++k) {
            std::size_t sum = 0;
            for (auto bd : b.bidegrees_of_degree(k)) {
                CHECK(b.dim(bd) == binomial(n, bd.p) * binomial(n, bd.q));
                sum += b.dim(bd);
            }
            CHECK(b.dim(k) == binomial(2 * n, k));
            CHECK(sum == b.dim(k));
        }
        for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index_of(b.element(i)) == i);
    }
    GradedBasis b2d(2);
    // (1,1) block is lexicographic on (S, T).
    auto r = b2d.bidegree_range({1, 1});
    CHECK(b2d.element(r.offset).to_string() == "dz1^dzb1");
    CHECK(b2d.element(r.offset + 1).to_string() == "dz1^dzb2");
    CHECK(b2d.element(r.offset + 2).to_string() == "dz2^dzb1");
    CHECK(b2d.element(r.offset + 3).to_string() == "dz2^dzb2");
    CHECK(b2d.bidegrees_of_degree(2).front() == Bidegree{2, 0});
}

TEST_CASE("wedge examples") {
    SUBCASE("n=1, theta = dx (w = 1): holo part sends 1 to dz/2") {
        GradedBasis b(1);
        Covector theta{{G(1)}};
        auto hol = wedge_matrix(b, theta, WedgePart::Holo);
        auto img = act(hol, unit(b, {0, 0}));
        auto expect = unit(b, {b1, 0});
        expect[b.index_of({b1, 0})] = kHalf;
        CHECK(img == expect);
    }
    SUBCASE("n=1: full wedge squares to zero") {
        GradedBasis b(1);
        std::mt19937 rng(1);
        for (int t = 0; t < 10; ++t) {
            auto e = wedge_matrix(b, random_covector(rng, 1), WedgePart::Full);
            CHECK((e * e).is_zero());
        }
    }
    SUBCASE("n=2: holo part on dzbar_1") {
        GradedBasis b(2);
        Covector theta{{G(Rational(3), Rational(1)), G(Rational(-2), Rational(5))}};
        auto hol = wedge_matrix(b, theta, WedgePart::Holo);
        auto img = act(hol, unit(b, {0, b1}));
        CHECK(img[b.index_of({b1, b1})] == theta.w[0].conj() * kHalf);
        CHECK(img[b.index_of({b2, b1})] == theta.w[1].conj() * kHalf);
        std::size_t nonzero = 0;
        for (const auto& x : img) nonzero += x.is_zero() ? 0 : 1;
        CHECK(nonzero == 2);
    }
    SUBCASE("sign of dzbar crossing the dz block") {
        GradedBasis b(2);
        // dzbar_1 ^ dz_1 = -dz_1 ^ dzbar_1
        auto img = act(wedge_dzbar(b, 0), unit(b, {b1, 0}));
        CHECK(img[b.index_of({b1, b1})] == G(-1));
        // dz_2 ^ dz_1 = -dz_1 ^ dz_2, while dz_1 ^ dz_2 is already canonical
        CHECK(act(wedge_dz(b, 1), unit(b, {b1, 0}))[b.index_of({b1 | b2, 0})] == G(-1));
        CHECK(act(wedge_dz(b, 0), unit(b, {b2, 0}))[b.index_of({b1 | b2, 0})] == G(1));
    }
}

TEST_CASE("gram examples") {
    GradedBasis b1d(1);
    CHECK(gram(b1d, 0).matrix() == ExactMatrix{{1}});
    CHECK(gram(b1d, Bidegree{1, 0}).matrix() == ExactMatrix{{2}});
    CHECK(gram(b1d, Bidegree{1, 1}).matrix() == ExactMatrix{{4}});
    GradedBasis b2d(2);
    CHECK(gram(b2d, Bidegree{1, 1}).matrix() == ExactMatrix::scalar(4, G(4)));
}

TEST_CASE("Lefschetz L examples") {
    GradedBasis b(1);
    auto L = lefschetz_L(b);
    auto omega = act(L, unit(b, {0, 0}));
    auto expect = std::vector<G>(b.size());
    expect[b.index_of({b1, b1})] = kHalfI;
    CHECK(omega == expect);
    CHECK(act(L, unit(b, {b1, b1})) == std::vector<G>(b.size()));
    CHECK(gram(b).inner(omega, omega) == G(1));

    GradedBasis b2d(2);
    auto omega2 = act(lefschetz_L(b2d), unit(b2d, {0, 0}));
    std::vector<G> expect2(b2d.size());
    expect2[b2d.index_of({b1, b1})] = kHalfI;
    expect2[b2d.index_of({b2, b2})] = kHalfI;
    CHECK(omega2 == expect2);
}

TEST_CASE("Lefschetz Lambda examples") {
    GradedBasis b(1);
    auto L = lefschetz_L(b);
    auto Lam = lefschetz_Lambda(b);
    CHECK(act(Lam, act(L, unit(b, {0, 0}))) == unit(b, {0, 0}));
    for (int n = 1; n <= 3; ++n) {
        GradedBasis bn(n);
        auto Ln = lefschetz_Lambda(bn);
        for (int k = 0; k <= 1; ++k) {
            auto r = bn.degree_range(k);
            CHECK(ExactMatrix(Ln.block(0, r.offset, bn.size(), r.size)).is_zero());
        }
    }
    GradedBasis b2d(2);
    auto one = unit(b2d, {0, 0});
    auto twice = one;
    twice[0] = G(2);
    CHECK(act(lefschetz_Lambda(b2d), act(lefschetz_L(b2d), one)) == twice);
}

TEST_CASE("counting H examples") {
    GradedBasis b(1);
    auto H = counting_H(b);
    CHECK(H(0, 0) == G(1));
    CHECK(H(1, 1) == G(0));
    CHECK(H(2, 2) == G(0));
    CHECK(H(3, 3) == G(-1));
    GradedBasis b2d(2);
    auto r = b2d.bidegree_range({1, 1});
    CHECK(restrict_block(counting_H(b2d), r, r).is_zero());
    for (int n = 1; n <= 3; ++n) {
        GradedBasis bn(n);
        auto Hn = counting_H(bn);
        G trace;
        for (std::size_t i = 0; i < bn.size(); ++i) trace += Hn(i, i);
        CHECK(trace == G(0));
    }
}

TEST_CASE("sl2 relations hold exactly for n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        auto s = check_sl2(n);
        CHECK(s.lambda_L);
        CHECK(s.H_L);
        CHECK(s.H_Lambda);
    }
    CHECK_NOTHROW(self_test());
}

TEST_CASE("Clifford relation and alternation") {
    std::mt19937 rng(42);
    for (int n = 1; n <= 3; ++n) {
        KahlerExterior ext(n);
        for (int t = 0; t < 4; ++t) {
            auto theta = random_covector(rng, n);
            auto e = ext.wedge(theta, WedgePart::Full);
            auto es = adjoint_wrt(e, ext.gram(), ext.gram());
            CHECK((e * e).is_zero());
            CHECK(anticommutator(e, es) == ExactMatrix::scalar(ext.basis().size(), G(theta.norm_sq())));
        }
    }
}

TEST_CASE("Clifford worked example on dz for n=1, theta = dx") {
    KahlerExterior ext(1);
    const auto& b = ext.basis();
    auto e = ext.wedge(Covector{{G(1)}}, WedgePart::Full);
    auto es = adjoint_wrt(e, ext.gram(), ext.gram());
    auto dz = unit(b, {b1, 0});
    auto first = act(e * es, dz);
    auto second = act(es * e, dz);
    std::vector<G> a(b.size()), c(b.size());
    a[b.index_of({b1, 0})] = kHalf;
    a[b.index_of({0, b1})] = kHalf;
    c[b.index_of({b1, 0})] = kHalf;
    c[b.index_of({0, b1})] = -kHalf;
    CHECK(first == a);
    CHECK(second == c);
}

TEST_CASE("bidegree bookkeeping") {
    std::mt19937 rng(9);
    KahlerExterior ext(2);
    const auto& b = ext.basis();
    auto theta = random_covector(rng, 2);
    auto hol = ext.wedge(theta, WedgePart::Holo);
    auto anti = ext.wedge(theta, WedgePart::Antiholo);
    for (std::size_t c = 0; c < b.size(); ++c) {
        auto src = b.element(c).bidegree();
        for (std::size_t r = 0; r < b.size(); ++r) {
            auto dst = b.element(r).bidegree();
            if (!hol(r, c).is_zero()) CHECK(dst == Bidegree{src.p + 1, src.q});
            if (!anti(r, c).is_zero()) CHECK(dst == Bidegree{src.p, src.q + 1});
            if (!ext.L()(r, c).is_zero()) CHECK(dst == Bidegree{src.p + 1, src.q + 1});
        }
    }
}

TEST_CASE("conjugation swaps holomorphic and antiholomorphic wedge") {
    std::mt19937 rng(13);
    for (int n = 1; n <= 3; ++n) {
        KahlerExterior ext(n);
        const auto& C = ext.conj();
        CHECK(C * C.conjugate() == ExactMatrix::identity(ext.basis().size()));
        auto theta = random_covector(rng, n);
        auto hol = ext.wedge(theta, WedgePart::Holo);
        auto anti = ext.wedge(theta, WedgePart::Antiholo);
        CHECK(C * hol.conjugate() == anti * C);
        CHECK(C * ext.L().conjugate() == ext.L() * C);
    }
}
