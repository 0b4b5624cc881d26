// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <unistd.h>

#ifdef __GLIBC__
#include <malloc.h>
#endif

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "eigenhodge/exactla/linalg.hpp"
#include "eigenhodge/exterior/operators.hpp"
#include "eigenhodge/torus/torus.hpp"
#include "eigenhodge/verifier/mutation.hpp"
#include "eigenhodge/verifier/package_io.hpp"
#include "eigenhodge/verifier/report.hpp"
#include "eigenhodge/verifier/torus_package.hpp"

using namespace eigenhodge;
using torus::TorusSpec;

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << title << ": " << o.detail << std::endl;
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

RationalMatrix diag_last(int n, std::int64_t last) {
    RationalMatrix m = RationalMatrix::identity(2 * n);
    m(2 * n - 1, 2 * n - 1) = Rational(last);
    return m;
}

// Each real plane spanned by (1, 0) and (1/2, 3/4).
RationalMatrix shear(int n) {
    RationalMatrix m = RationalMatrix::identity(2 * n);
    for (int k = 0; k < n; ++k) {
        m(2 * k, 2 * k + 1) = Rational(1, 2);
        m(2 * k + 1, 2 * k + 1) = Rational(3, 4);
    }
    return m;
}

struct Lattice {
    std::string name;
    TorusSpec spec;
};

std::vector<Lattice> corpus() {
    std::vector<Lattice> out;
    for (int n = 1; n <= 3; ++n) {
        const std::string dim = std::to_string(2 * n);
        out.push_back({"Z^" + dim, TorusSpec::standard(n)});
        out.push_back({"diag(1,...,1,2) in R^" + dim, TorusSpec(n, diag_last(n, 2))});
        out.push_back({"shear in R^" + dim, TorusSpec(n, shear(n))});
    }
    return out;
}

// Squared lengths of all integer vectors in Z^dim with |c|^2 <= mu_max,
// with multiplicity, from a plain box scan.
std::map<std::int64_t, std::size_t> integer_norms(int dim, std::int64_t mu_max) {
    const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(mu_max))) + 1;
    std::map<std::int64_t, std::size_t> out;
    std::vector<std::int64_t> c(dim, -r);
    while (true) {
        std::int64_t s = 0;
        for (auto x : c) s += x * x;
        if (s <= mu_max) ++out[s];
        int i = 0;
        while (i < dim && c[i] == r) c[i++] = -r;
        if (i == dim) break;
        ++c[i];
    }
    return out;
}

std::size_t binom(int n, int k) {
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() / ("eigenhodge_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr) {
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    if (out != nullptr) *out = o.str();
    return code;
}

std::string torus_file(const Scratch& s, const std::string& name, int n) {
    std::ostringstream doc;
    doc << "{\"n\": " << n << ", \"basis\": [";
    for (int r = 0; r < 2 * n; ++r) {
        doc << (r ? ", [" : "[");
        for (int c = 0; c < 2 * n; ++c) doc << (c ? ", " : "") << (r == c ? "\"1\"" : "\"0\"");
        doc << "]";
    }
    doc << "]}";
    const auto p = s.path(name);
    verifier::write_file(p, doc.str());
    return p;
}

Outcome criterion1() {
    const auto t0 = Clock::now();
    std::ostringstream detail;
    bool pass = true;
    for (int n : {1, 2}) {
        const auto t = TorusSpec::standard(n);
        const auto lines = torus::enumerate_modes(t, 10);
        const exterior::KahlerExterior ext(n);
        std::set<Rational> spectrum;
        std::map<std::int64_t, std::size_t> counts;
        for (const auto& line : lines) {
            // Every mode of the line must carry the Laplacian mu * I.
            for (const auto& v : line.modes) {
                const auto ops = torus::mode_operators(t, v, ext);
                pass = pass && ops.laplacian == GaussianRational(line.mu) * ExactMatrix::identity(ops.laplacian.rows());
            }
            if (line.mu.sign() > 0) spectrum.insert(line.mu);
            counts[line.mu.floor()] = line.mode_count();
            pass = pass && line.mu.is_integer();
        }
        // L* = Z^{2n} for the standard lattice.
        const auto oracle = integer_norms(2 * n, 10);
        std::set<Rational> oracle_spectrum;
        for (const auto& [mu, count] : oracle) {
            if (mu > 0) oracle_spectrum.insert(Rational(mu));
        }
        pass = pass && spectrum == oracle_spectrum && counts == oracle;
        detail << "Z^" << 2 * n << " " << spectrum.size() << " positive eigenvalues";
        detail << (spectrum == oracle_spectrum ? " = " : " != ") << "box scan; ";
    }
    const double secs = seconds_since(t0);
    pass = pass && secs < 10.0;
    detail << "multiplicities match; " << fmt_seconds(secs) << " (< 10s)";
    return {pass, detail.str()};
}

Outcome criterion2() {
    const auto t = TorusSpec::standard(1);
    const Rational mu_max(10);
    verifier::BatteryOptions opts;
    opts.window = mu_max;
    opts.covered = mu_max;
    const auto rep = verifier::run_battery(1, verifier::torus_components(t, torus::enumerate_modes(t, mu_max)), opts);
    std::vector<std::set<Rational>> spectra(3);
    for (const auto& line : rep.lines) {
        for (int k = 0; k <= 2; ++k) {
            if (line.mu.sign() > 0 && line.b[static_cast<std::size_t>(k)] > 0) spectra[static_cast<std::size_t>(k)].insert(line.mu);
        }
    }
    std::set<Rational> oracle;
    for (const auto& [mu, count] : integer_norms(2, 10)) {
        if (mu > 0) oracle.insert(Rational(mu));
    }
    bool pass = rep.valid && spectra[0] == spectra[1] && spectra[1] == spectra[2] && spectra[0] == oracle;
    std::size_t s_checks = 0;
    for (const auto& v : rep.spectrum) {
        pass = pass && v.pass;
        ++s_checks;
    }
    std::ostringstream d;
    d << "Delta_0, Delta_1, Delta_2 each have " << spectra[0].size() << "/" << spectra[1].size() << "/"
      << spectra[2].size() << " positive eigenvalues up to mu=10, equal as sets; " << s_checks << " S.* verdicts pass";
    return {pass, d.str()};
}

struct CorpusRun {
    std::string name;
    std::vector<verifier::Component> components;
};

std::vector<CorpusRun>& corpus_components() {
    static std::vector<CorpusRun> runs = [] {
        std::vector<CorpusRun> out;
        for (const auto& l : corpus()) {
            out.push_back({l.name, verifier::torus_components(l.spec, torus::enumerate_modes(l.spec, 5))});
        }
        return out;
    }();
    return runs;
}

Outcome criterion3() {
    const auto t0 = Clock::now();
    auto& runs = corpus_components();
    std::size_t identities = 0, packages = 0;
    std::vector<std::string> bad;
    for (const auto& run : runs) {
        std::vector<verifier::Verdict> merged;
        verifier::merge_identity_verdicts(merged, {});
        for (const auto& comp : run.components) {
            const auto ops = verifier::derive(comp.package);
            verifier::merge_identity_verdicts(merged, verifier::validate_component(ops, comp));
        }
        for (const auto& v : merged) {
            if (v.id.rfind("K.", 0) != 0) continue;
            ++identities;
            if (!v.pass) bad.push_back(run.name + ": " + v.name);
        }
        ++packages;
    }
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << packages << " packages (n=1,2,3; Z^2n, stretched, shear; mu<=5), " << identities
      << " K.sl2/K.nakano/K.laplacians identities, " << bad.size() << " failures; " << fmt_seconds(secs) << " (< 60s)";
    if (!bad.empty()) d << "; first: " << bad.front();
    return {bad.empty() && secs < 60.0, d.str()};
}

Outcome criterion4() {
    auto& runs = corpus_components();
    std::size_t verdicts = 0, lines = 0;
    std::set<std::string> seen;
    std::vector<std::string> bad;
    const auto lattices = corpus();
    for (std::size_t i = 0; i < runs.size(); ++i) {
        verifier::BatteryOptions opts;
        opts.window = Rational(5);
        opts.covered = Rational(5);
        const auto rep = verifier::run_battery(lattices[i].spec.n(), runs[i].components, opts);
        lines += rep.lines.size();
        for (const auto* v : rep.verdicts()) {
            if (v->id.rfind("K.", 0) == 0) continue;
            ++verdicts;
            seen.insert(v->id);
            if (!v->pass) bad.push_back(runs[i].name + ": " + v->id + " " + v->name);
        }
        if (!rep.valid) bad.push_back(runs[i].name + ": identities fail");
    }
    std::set<std::string> expected;
    for (const auto& id : verifier::check_ids()) {
        if (id.rfind("K.", 0) != 0) expected.insert(id);
    }
    std::ostringstream d;
    d << verdicts << " verdicts over " << lines << " lines, " << seen.size() << "/" << expected.size()
      << " check ids exercised, " << bad.size() << " failures";
    if (!bad.empty()) d << "; first: " << bad.front();
    return {bad.empty() && seen == expected, d.str()};
}

Outcome criterion5() {
    const auto t = TorusSpec::standard(2);
    auto lines = torus::enumerate_modes(t, 1);
    if (lines.size() != 2 || lines[1].mu != Rational(1)) return {false, "mu = 1 line missing"};
    const auto& line = lines[1];

    // Oracle: N(1) counts the integer vectors of length 1 in Z^4; hard
    // Lefschetz makes both maps isomorphisms onto N * C(4, k) dimensions.
    const std::size_t N = integer_norms(4, 1).at(1);
    const std::size_t want1 = N * binom(4, 1), want2 = N * binom(4, 0);

    // Route 1: component measurements inside the verifier.
    verifier::LineMeasurements m(2, Rational(1));
    for (const auto& comp : verifier::torus_components(t, {line})) {
        const auto ops = verifier::derive(comp.package);
        std::size_t covered = 0;
        for (const auto& piece : verifier::eigen_pieces(ops, nullptr, covered)) m += verifier::measure(ops, piece);
    }
    // Route 2: the dense assembled line.
    const exterior::KahlerExterior ext(2);
    const auto a = torus::assemble_line(t, line, ext);
    const auto e1 = torus::assemble_eigenspace(a, ext.basis(), 1);
    const auto e0 = torus::assemble_eigenspace(a, ext.basis(), 0);
    const std::size_t r1 = rank(a.L * e1.basis), r2 = rank(a.L * (a.L * e0.basis));
    const std::size_t k1 = e1.basis.cols() - r1;

    const bool pass = N == 8 && m.lefschetz[1] == want1 && m.lefschetz[2] == want2 && r1 == want1 && r2 == want2 &&
                      k1 == 0 && m.b[1] == m.b[3] && m.b[0] == m.b[4];
    std::ostringstream d;
    d << "Z^4, mu=1, N(1)=" << N << ": rank L: E^1 -> E^3 = " << m.lefschetz[1] << " (assembled " << r1
      << ", oracle " << want1 << "), rank L^2: E^0 -> E^4 = " << m.lefschetz[2] << " (assembled " << r2 << ", oracle "
      << want2 << "), kernel of L on E^1 is " << k1;
    return {pass, d.str()};
}

Outcome criterion6() {
    Scratch s;
    const auto t = TorusSpec::standard(1);
    const auto base = verifier::torus_package(t, torus::enumerate_modes(t, 2));
    const auto controls = verifier::negative_controls(base);
    std::size_t caught = 0, exit1 = 0;
    std::vector<std::string> missed;
    std::size_t k = 0;
    for (const auto& m : controls) {
        const auto path = s.path("mutant_" + std::to_string(k++) + ".json");
        verifier::save_package(verifier::mutate(base, m), path);
        std::string out;
        const int code = run_cli({"verify", "--mode", "package", "--input", path, "--format", "json"}, &out);
        const auto doc = nlohmann::json::parse(out);
        const bool failed_verdict = doc["summary"]["failed"].get<std::size_t>() > 0;
        caught += failed_verdict ? 1 : 0;
        exit1 += code == 1 ? 1 : 0;
        if (!failed_verdict || code != 1) missed.push_back(m.describe());
    }
    std::ostringstream d;
    d << controls.size() << " single-block mutants of the Z^2 package (mu<=2): " << caught
      << " with a failing verdict, " << exit1 << " with exit status 1";
    if (!missed.empty()) d << "; missed: " << missed.front();
    return {controls.size() >= 12 && missed.empty(), d.str()};
}

Outcome criterion7() {
    Scratch s;
    const auto z2 = torus_file(s, "z2.json", 1);
    const auto pkg = s.path("z2_package.json");
    bool pass = run_cli({"export", "--input", z2, "--mu-max", "2", "--out", pkg}) == 0;
    std::size_t bytes = 0;
    std::vector<std::string> formats{"json", "text", "csv"};
    for (const auto& f : formats) {
        std::string direct, imported;
        pass = pass && run_cli({"verify", "--input", z2, "--mu-max", "2", "--format", f}, &direct) == 0;
        pass = pass && run_cli({"verify", "--mode", "package", "--input", pkg, "--format", f}, &imported) == 0;
        pass = pass && direct == imported && !direct.empty();
        if (f == "json") bytes = direct.size();
    }
    // Re-exporting the imported package reproduces the file.
    const auto again = s.path("z2_again.json");
    verifier::save_package(verifier::load_package(pkg), again);
    pass = pass && verifier::read_file(pkg) == verifier::read_file(again);
    std::ostringstream d;
    d << "Z^2, mu<=2: direct and exported/imported reports identical in json (" << bytes
      << " bytes), text and csv; package file is a fixed point of load/save";
    return {pass, d.str()};
}

Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> zero(0, 3), num(-9, 9), den(1, 6);
    if (zero(rng) == 0) return Rational();
    return Rational(num(rng), den(rng));
}

Outcome criterion8() {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> size(1, 6);
    std::size_t rn_ok = 0, ldl_ok = 0;
    const std::size_t trials = 1000;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        // Rank-nullity, with a planted dependency half of the time.
        const auto r = static_cast<std::size_t>(size(rng)), c = static_cast<std::size_t>(size(rng));
        RationalMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) m(i, j) = small_rational(rng);
        }
        if (c > 1 && trial % 2 == 0) {
            const Rational f = small_rational(rng);
            for (std::size_t i = 0; i < r; ++i) m(i, c - 1) = m(i, 0) * f + m(i, c / 2);
        }
        const auto k = kernel_matrix(m);
        bool ok = rank(m) + k.cols() == c && k.rows() == c && (m * k).is_zero() && rank(k) == k.cols();
        rn_ok += ok ? 1 : 0;

        // LDL^H of a random Hermitian positive-definite Gaussian-rational matrix.
        const auto n = static_cast<std::size_t>(size(rng));
        ExactMatrix a(n + 1, n);
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a(i, j) = GaussianRational(small_rational(rng), small_rational(rng));
        }
        ExactMatrix g = a.adjoint() * a + GaussianRational(Rational(1, 3)) * ExactMatrix::identity(n);
        const auto f = ldlt(g);
        ExactMatrix d(n, n);
        bool unit = true;
        for (std::size_t i = 0; i < n; ++i) {
            d(i, i) = GaussianRational(f.pivots[i]);
            unit = unit && f.lower(i, i).is_one() && f.pivots[i].sign() > 0;
            for (std::size_t j = i + 1; j < n; ++j) unit = unit && f.lower(i, j).is_zero();
        }
        ldl_ok += (unit && f.lower * d * f.lower.adjoint() == g) ? 1 : 0;
    }
    std::ostringstream d;
    d << rn_ok << "/" << trials << " rank + nullity = cols with verified kernels, " << ldl_ok << "/" << trials
      << " exact LDL^H reconstructions";
    return {rn_ok == trials && ldl_ok == trials, d.str()};
}

}  // namespace

int main() {
#ifdef __GLIBC__
    mallopt(M_MMAP_THRESHOLD, 256 << 20);
    mallopt(M_TRIM_THRESHOLD, 256 << 20);
#endif
    exterior::self_test();
    report(1, "flat torus spectrum vs box scan", criterion1);
    report(2, "n=1 spectra of Delta_0, Delta_1, Delta_2 coincide", criterion2);
    report(3, "identity suite", criterion3);
    report(4, "theorem battery", criterion4);
    report(5, "hard Lefschetz ranks", criterion5);
    report(6, "mutation sensitivity", criterion6);
    report(7, "round-trip determinism", criterion7);
    report(8, "rank-nullity and LDL^H property tests", criterion8);
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? 0 : 1;
}
