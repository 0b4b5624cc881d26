#include <set>

#include "doctest.h"
#include "eigenhodge/verifier/mutation.hpp"
#include "eigenhodge/verifier/package_io.hpp"
#include "eigenhodge/verifier/report.hpp"
#include "eigenhodge/verifier/torus_package.hpp"

using namespace eigenhodge;
using namespace eigenhodge::verifier;
using torus::TorusSpec;

namespace {

using G = GaussianRational;

std::vector<Component> torus_comps(const TorusSpec& t, int mu_max) {
    return torus_components(t, torus::enumerate_modes(t, mu_max));
}

KahlerPackage torus_pkg(const TorusSpec& t, int mu_max) { return torus_package(t, torus::enumerate_modes(t, mu_max)); }

bool all_pass(const std::vector<Verdict>& v) {
    return std::all_of(v.begin(), v.end(), [](const Verdict& x) { return x.pass; });
}

const Verdict* find(const std::vector<Verdict>& v, const std::string& id, const std::string& name) {
    for (const auto& x : v) {
        if (x.id == id && x.name == name) return &x;
    }
    return nullptr;
}

/// Line measurements of one eigenvalue, summed over components.
LineMeasurements line_of(const std::vector<Component>& comps, int n, const Rational& mu) {
    LineMeasurements total(n, mu);
    for (const auto& c : comps) {
        auto ops = derive(c.package);
        std::size_t covered = 0;
        for (const auto& piece : eigen_pieces(ops, nullptr, covered)) {
            if (piece.mu == mu) total += measure(ops, piece);
        }
    }
    return total;
}

const LineReport& report_line(const Report& r, const Rational& mu) {
    for (const auto& l : r.lines) {
        if (l.mu == mu) return l;
    }
    FAIL("line not found");
    throw 0;
}

/// Conjugates block (0,0) by S = 1 + E_{0,1}, coupling its first two
/// coordinates. Every identity is preserved; the Laplacian stops being
/// diagonal when the two coordinates carry different eigenvalues.
KahlerPackage shear_00(const KahlerPackage& pkg) {
    const Bidegree b{0, 0};
    const std::size_t d = pkg.dim(b);
    ExactMatrix s = ExactMatrix::identity(d);
    s(0, 1) = G(1);
    const ExactMatrix s_inv = inverse(s);
    KahlerPackage out = pkg;
    ExactMatrix g = pkg.gram.contains(b) ? pkg.gram.at(b) : ExactMatrix::identity(d);
    out.gram[b] = s_inv.adjoint() * g * s_inv;
    for (auto* fam : {&out.partial, &out.dbar, &out.lefschetz, &out.conj}) {
        if (fam->contains(b)) (*fam)[b] = fam->at(b) * s_inv;
    }
    // conj lands in (0,0) from (0,0) as well: C' = S C conj(S)^-1.
    if (out.conj.contains(b)) out.conj[b] = s * out.conj[b];
    return out;
}

}  // namespace

TEST_CASE("torus package passes every identity") {
    for (const auto& t : {TorusSpec::standard(1), TorusSpec(1, RationalMatrix{{2, 0}, {0, 1}})}) {
        auto v = validate_package(torus_pkg(t, 2));
        CHECK(v.size() == 18);
        CHECK(all_pass(v));
    }
}

TEST_CASE("zero package is vacuously valid") {
    KahlerPackage pkg;
    pkg.n = 2;
    CHECK(all_pass(validate_package(pkg)));
    auto r = run_battery(2, split_components(pkg));
    CHECK(r.all_pass());
    CHECK(r.lines.empty());
}

TEST_CASE("shape errors") {
    auto pkg = torus_pkg(TorusSpec::standard(1), 1);
    pkg.dbar[{0, 0}] = ExactMatrix(1, 1);
    try {
        validate_package(pkg);
        FAIL("expected ShapeMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ShapeMismatch);
    }
    auto bad_gram = torus_pkg(TorusSpec::standard(1), 0);
    bad_gram.gram[{0, 0}] = ExactMatrix{{-1}};
    try {
        validate_package(bad_gram);
        FAIL("expected NotPositiveDefinite");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPositiveDefinite);
    }
}

TEST_CASE("doubling dbar on one block breaks Delta = 2 Delta_dbar with a witness") {
    auto pkg = torus_pkg(TorusSpec::standard(1), 2);
    auto bad = mutate(pkg, {Family::Dbar, {0, 0}, Mutation::Kind::Scale, G(2)});
    auto v = validate_package(bad);
    const auto* laplace = find(v, "K.laplacians", "Delta = 2(QQ* + Q*Q)");
    REQUIRE(laplace != nullptr);
    CHECK_FALSE(laplace->pass);
    CHECK(laplace->witness.kind == Witness::Kind::BasisVector);
    CHECK(laplace->witness.index < pkg.total_dim());
}

TEST_CASE("eigen lines of Z^2") {
    auto comps = torus_comps(TorusSpec::standard(1), 1);
    auto r = run_battery(1, comps);
    REQUIRE(r.lines.size() == 2);
    const auto& zero = report_line(r, 0);
    CHECK(zero.h.at(0, 0) == 1);
    CHECK(zero.h.at(1, 0) == 1);
    CHECK(zero.h.at(0, 1) == 1);
    CHECK(zero.h.at(1, 1) == 1);
    const auto& one = report_line(r, 1);
    for (int p = 0; p <= 1; ++p) {
        for (int q = 0; q <= 1; ++q) CHECK(one.h.at(p, q) == 4);
    }
    CHECK(one.b == std::vector<std::size_t>{4, 8, 4});
}

TEST_CASE("general packages use caller candidates") {
    const auto pkg = shear_00(torus_pkg(TorusSpec::standard(1), 1));
    CHECK(all_pass(validate_package(pkg)));
    auto comps = split_components(pkg);
    SUBCASE("without candidates the spectrum is incomplete") {
        try {
            run_battery(1, comps);
            FAIL("expected IncompleteSpectrum");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::IncompleteSpectrum);
        }
    }
    SUBCASE("candidates reproduce the unsheared dimensions") {
        const std::vector<Rational> cands{0, 1, 3};
        BatteryOptions opts;
        opts.candidates = &cands;
        auto r = run_battery(1, comps, opts);
        auto plain = run_battery(1, torus_comps(TorusSpec::standard(1), 1));
        CHECK(r.all_pass());
        REQUIRE(r.lines.size() == 3);
        CHECK(report_line(r, 0).b == report_line(plain, 0).b);
        CHECK(report_line(r, 1).h == report_line(plain, 1).h);
        // Not in the spectrum: reported with empty eigenspaces.
        CHECK(report_line(r, 3).b == std::vector<std::size_t>{0, 0, 0});
    }
}

TEST_CASE("theorem 1 on Z^2, mu = 1") {
    auto m = line_of(torus_comps(TorusSpec::standard(1), 1), 1, 1);
    CHECK(m.lefschetz[1] == 4);
    CHECK(m.b[0] == 4);
    CHECK(m.b[2] == 4);
    CHECK(all_pass(check_theorem1(m)));
}

TEST_CASE("hard Lefschetz on Z^4, mu = 1") {
    auto m = line_of(torus_comps(TorusSpec::standard(2), 1), 2, 1);
    // N(1) = 8 in Z^4 (the vectors +-e_i), so b^k = 8 C(4,k).
    CHECK(m.b == std::vector<std::size_t>{8, 32, 48, 32, 8});
    CHECK(m.lefschetz[1] == 32);
    CHECK(m.lefschetz[2] == 8);
    CHECK(all_pass(check_theorem1(m)));
    for (int p = 0; p <= 2; ++p) {
        for (int q = 0; q <= 2; ++q) CHECK(m.h.at(p, q) == 8 * exterior::binomial(2, p) * exterior::binomial(2, q));
    }
}

TEST_CASE("corollary 1") {
    auto m = line_of(torus_comps(TorusSpec::standard(1), 1), 1, 1);
    CHECK(all_pass(check_corollary1(1, m.b, m.h)));
    SUBCASE("Z^4, mu = 2") {
        auto m2 = line_of(torus_comps(TorusSpec::standard(2), 2), 2, 2);
        // 24 vectors with two coordinates +-1.
        for (int p = 0; p <= 2; ++p) {
            for (int q = 0; q <= 2; ++q) {
                CHECK(m2.h.at(p, q) == 24 * exterior::binomial(2, p) * exterior::binomial(2, q));
            }
        }
        CHECK(all_pass(check_corollary1(2, m2.b, m2.h)));
    }
    SUBCASE("decremented b^1 fails (a) and (c)") {
        auto b = m.b;
        b[1] -= 1;
        auto v = check_corollary1(1, b, m.h);
        std::set<std::string> failed;
        for (const auto& x : v) {
            if (!x.pass) failed.insert(x.id);
        }
        CHECK(failed == std::set<std::string>{"C1.a", "C1.c"});
    }
}

TEST_CASE("exact/coexact split on Z^2, mu = 1") {
    auto m = line_of(torus_comps(TorusSpec::standard(1), 1), 1, 1);
    auto s = split_exact_coexact(m);
    CHECK(s.d_exact[1] == 4);
    CHECK(s.d_coexact[1] == 4);
    CHECK(s.exact.at(0, 1) == 4);
    CHECK(s.coexact.at(0, 1) == 0);
    CHECK(all_pass(check_split(m)));
    auto zero = line_of(torus_comps(TorusSpec::standard(1), 1), 1, 0);
    CHECK_THROWS_AS(split_exact_coexact(zero), Error);
    try {
        check_theorem2(zero);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroEigenvalueLine);
    }
}

TEST_CASE("degree-0 lemma") {
    auto m = line_of(torus_comps(TorusSpec::standard(1), 1), 1, 1);
    auto v = check_degree0_lemma(m);
    CHECK(all_pass(v));
    CHECK(v[0].witness.lhs == 4);
    CHECK(v[0].witness.rhs == 4);
    auto m2 = line_of(torus_comps(TorusSpec::standard(2), 1), 2, 1);
    CHECK(m2.h.at(0, 1) == 16);
    CHECK(m2.b[1] == 32);
    CHECK(all_pass(check_degree0_lemma(m2)));
}

TEST_CASE("theorem 2") {
    auto m = line_of(torus_comps(TorusSpec::standard(1), 1), 1, 1);
    auto v = check_theorem2(m);
    CHECK(all_pass(v));
    const auto* a1 = find(v, "T2.a", "k=1");
    REQUIRE(a1 != nullptr);
    CHECK(a1->witness.lhs == 8);
    CHECK(a1->witness.rhs == 8);
    const auto* c0 = find(v, "T2.c", "k=0");
    REQUIRE(c0 != nullptr);
    CHECK(c0->witness.lhs == 4);
    CHECK(c0->witness.rhs == 8);

    auto comps = torus_comps(TorusSpec::standard(2), 1);
    auto m2 = line_of(comps, 2, 1);
    CHECK(m2.split.exact.at(0, 0) == 0);
    CHECK(m2.split.coexact.at(0, 0) == m2.split.exact.at(0, 1));
    CHECK(all_pass(check_theorem2(m2)));

    SUBCASE("omega replaced by zero") {
        LineMeasurements z(2, 1);
        for (const auto& c : comps) {
            auto ops = derive(c.package);
            ExactMatrix zero(ops.layout.total(), ops.layout.total());
            std::size_t cov = 0;
            for (const auto& piece : eigen_pieces(ops, nullptr, cov)) {
                if (piece.mu == Rational(1)) z += measure(ops, piece, &zero);
            }
        }
        auto bad = check_theorem2(z);
        const auto* e7 = find(bad, "E7", "(0,1) dbar*(omega ^ -) injective on exact part");
        REQUIRE(e7 != nullptr);
        CHECK_FALSE(e7->pass);
        const auto* vacuous = find(bad, "E7", "(0,0) dbar*(omega ^ -) injective on exact part");
        REQUIRE(vacuous != nullptr);
        CHECK(vacuous->pass);
    }
}

TEST_CASE("spectrum comparisons") {
    auto r = run_battery(1, torus_comps(TorusSpec::standard(1), 5));
    std::vector<LineDims> dims;
    std::vector<Rational> mus;
    for (const auto& l : r.lines) {
        dims.push_back({l.mu, l.b});
        if (l.mu.sign() > 0) mus.push_back(l.mu);
    }
    CHECK(mus == std::vector<Rational>{1, 2, 4, 5});
    for (const auto& l : r.lines) {
        if (l.mu.sign() > 0) CHECK((l.b[0] > 0 && l.b[1] > 0 && l.b[2] > 0));
    }
    CHECK(all_pass(compare_spectra(1, dims, Rational(5), Rational(5))));
    CHECK_THROWS_AS(compare_spectra(1, dims, Rational(6), Rational(5)), Error);

    SUBCASE("a degree-0 eigenvalue with no degree-1 counterpart") {
        std::vector<LineDims> adversarial{{0, {1, 2, 1}}, {3, {1, 0, 0}}};
        auto v = compare_spectra(1, adversarial, std::nullopt, std::nullopt);
        const auto* u = find(v, "S.union", "k=0 spec+ within spec+(k-1) u spec+(k+1)");
        REQUIRE(u != nullptr);
        CHECK_FALSE(u->pass);
        CHECK(u->witness.at == "mu=3");
    }
    SUBCASE("Z^4 lambda1 chain is constant") {
        auto r4 = run_battery(2, torus_comps(TorusSpec::standard(2), 3));
        CHECK(r4.all_pass());
        for (const auto& v : r4.spectrum) {
            if (v.name.find("lambda1") != std::string::npos) {
                CHECK(v.witness.lhs_value == "1");
                CHECK(v.witness.rhs_value == "1");
            }
        }
    }
}

TEST_CASE("validity is closed under direct sum") {
    auto a = torus_comps(TorusSpec::standard(1), 1);
    auto b = torus_comps(TorusSpec(1, RationalMatrix{{2, 0}, {0, 1}}), 1);
    auto pa = merge_components(1, a);
    auto pb = merge_components(1, b);
    auto sum = [](const KahlerPackage& x, const KahlerPackage& y) {
        auto cx = split_components(x);
        std::vector<std::size_t> shift;
        Layout lx(x), ly(y);
        // Block-wise concatenation: y's coordinates follow x's inside each block.
        std::vector<Component> all = cx;
        for (auto& c : split_components(y)) all.push_back(std::move(c));
        KahlerPackage shape;
        shape.n = 1;
        for (auto bd : bidegree_order(1)) shape.dims[bd] = x.dim(bd) + y.dim(bd);
        Layout ls(shape);
        for (std::size_t k = 0; k < all.size(); ++k) {
            const bool from_y = k >= cx.size();
            for (std::size_t i = 0; i < all[k].global.size(); ++i) {
                const auto bd = all[k].global_block[i];
                const auto& src = from_y ? ly : lx;
                const std::size_t pos = all[k].global[i] - src.range(bd).offset + (from_y ? x.dim(bd) : 0);
                all[k].global[i] = ls.range(bd).offset + pos;
            }
        }
        return merge_components(1, all);
    };
    CHECK(all_pass(validate_package(sum(pa, pb))));
    auto broken = mutate(pb, {Family::Partial, {0, 0}, Mutation::Kind::FlipEntry, {}});
    CHECK_FALSE(all_pass(validate_package(broken)));
    CHECK_FALSE(all_pass(validate_package(sum(pa, broken))));
}

TEST_CASE("package JSON round trip") {
    auto pkg = torus_pkg(TorusSpec::standard(1), 2);
    auto text = package_to_json(pkg).dump();
    auto back = package_from_json(parse_json(text, "test"));
    CHECK(package_to_json(back).dump() == text);

    auto direct = to_json(run_battery(1, torus_comps(TorusSpec::standard(1), 2), {})).dump(2);
    auto imported = to_json(run_battery(1, split_components(back), {})).dump(2);
    CHECK(direct == imported);

    CHECK_THROWS_AS(package_from_json(parse_json(R"({"n": 1, "bogus": 1})", "test")), Error);
    CHECK_THROWS_AS(package_from_json(parse_json(R"({"n": 1, "dims": {"0,0": 1}, "dbar": {"0,0": [["1//2"]]}})", "t")),
                    Error);
    CHECK_THROWS_AS(parse_json("{", "test"), Error);
}

TEST_CASE("every non-structural identity is caught by some mutation") {
    auto pkg = torus_pkg(TorusSpec::standard(2), 2);
    auto controls = negative_controls(pkg);
    CHECK(controls.size() >= 12);
    std::set<std::string> caught;
    for (const auto& m : controls) {
        auto v = validate_package(mutate(pkg, m));
        bool any = false;
        for (const auto& x : v) {
            if (!x.pass) {
                caught.insert(x.name);
                any = true;
            }
        }
        CHECK_MESSAGE(any, m.describe());
    }
    std::set<std::string> never;
    for (const auto& x : validate_package(pkg)) {
        if (!caught.contains(x.name)) never.insert(x.name);
    }
    // Forced by the bigrading: H is fixed and L, Lambda shift degree by +-2.
    CHECK(never == std::set<std::string>{"[H,L] = -2L", "[H,Lambda] = 2Lambda"});
}
