#include "cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eigenhodge/exterior/operators.hpp"
#include "eigenhodge/verifier/package_io.hpp"
#include "eigenhodge/verifier/report.hpp"
#include "eigenhodge/verifier/torus_package.hpp"

namespace eigenhodge::cli {

using nlohmann::json;
using nlohmann::ordered_json;

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::DimensionMismatch: return kParse;
    case ErrorKind::NotHermitian:
    case ErrorKind::NotPositiveDefinite:
    case ErrorKind::SingularBasis:
    case ErrorKind::NotInDualLattice:
    case ErrorKind::ZeroEigenvalueLine: return kDegenerate;
    case ErrorKind::UnknownEigenvalue:
    case ErrorKind::IncompleteSpectrum:
    case ErrorKind::IncompleteRange: return kUnknownEigenvalue;
    case ErrorKind::IoError: return kIo;
    }
    return kParse;
}

torus::TorusSpec parse_torus(const std::string& text, const std::string& what) {
    const json doc = verifier::parse_json(text, what);
    if (!doc.is_object()) throw Error(ErrorKind::ParseError, what + ": expected an object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "n" && key != "basis") throw Error(ErrorKind::ParseError, what + ": unknown field \"" + key + "\"");
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer()) {
        throw Error(ErrorKind::ParseError, what + ": missing integer n");
    }
    const int n = doc["n"].get<int>();
    if (n < 1 || n > 5) throw Error(ErrorKind::ParseError, what + ": n must lie in [1, 5]");
    if (!doc.contains("basis")) throw Error(ErrorKind::ParseError, what + ": missing basis");
    const auto m = verifier::matrix_from_json(doc["basis"], what + " basis");
    const std::size_t dim = 2 * static_cast<std::size_t>(n);
    if (m.rows() != dim || m.cols() != dim) {
        throw Error(ErrorKind::ParseError, what + ": basis must be " + std::to_string(dim) + " x " + std::to_string(dim));
    }
    RationalMatrix basis(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if (!m(r, c).is_real()) throw Error(ErrorKind::ParseError, what + ": basis entries must be real");
            basis(r, c) = m(r, c).re();
        }
    }
    return torus::TorusSpec(n, std::move(basis));
}

torus::TorusSpec load_torus(const std::string& path) { return parse_torus(verifier::read_file(path), path); }

namespace {

enum class Format { Text, Json, Csv };

struct RunConfig {
    std::string input;
    std::string mode = "torus";
    std::string mu_max = "0";
    std::string mu;
    std::vector<std::string> checks;
    std::vector<std::string> eigenvalues;
    std::vector<int> degrees;
    Format format = Format::Text;
    std::string out;
    bool approx = false;
};

Rational parse_mu(const std::string& text, const char* flag) {
    Rational mu;
    try {
        mu = Rational::parse(text);
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, std::string(flag) + ": " + e.what());
    }
    if (mu.sign() < 0) throw Error(ErrorKind::ParseError, std::string(flag) + " must be nonnegative");
    return mu;
}

std::optional<std::set<std::string>> parse_checks(const std::vector<std::string>& ids) {
    if (ids.empty() || std::find(ids.begin(), ids.end(), "all") != ids.end()) {
        if (ids.size() > 1) throw Error(ErrorKind::ParseError, "--checks: \"all\" cannot be combined with ids");
        return std::nullopt;
    }
    std::set<std::string> out;
    for (const auto& id : ids) {
        if (!verifier::is_check_id(id)) throw Error(ErrorKind::ParseError, "--checks: unknown check id \"" + id + "\"");
        out.insert(id);
    }
    return out;
}

void require_torus(const RunConfig& c, const char* cmd) {
    if (c.mode != "torus") throw Error(ErrorKind::ParseError, std::string(cmd) + " needs --mode torus");
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (c.out.empty()) {
        out << text;
    } else {
        verifier::write_file(c.out, text);
    }
}

std::string lambda_text(const Rational& mu) { return "4π²·" + mu.to_string(); }

std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char ch : s) w += (ch & 0xC0) != 0x80 ? 1 : 0;
    return w;
}

std::string pad(const std::string& s, std::size_t width, bool left = false) {
    const std::size_t w = display_width(s);
    const std::string fill(width > w ? width - w : 0, ' ');
    return left ? s + fill : fill + s;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

// Renders rows of cells with right-aligned columns except the first.
std::string render_rows(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_width(row[i]));
    }
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) os << "  ";
            os << pad(row[i], width[i], i == 0);
        }
        os << '\n';
    }
    return os.str();
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
    require_torus(c, "spectrum");
    const auto t = load_torus(c.input);
    const Rational mu_max = parse_mu(c.mu_max, "--mu-max");
    const int n = t.n();
    std::vector<int> degrees = c.degrees;
    if (degrees.empty()) {
        for (int k = 0; k <= 2 * n; ++k) degrees.push_back(k);
    }
    for (int k : degrees) {
        if (k < 0 || k > 2 * n) throw Error(ErrorKind::ParseError, "--degree " + std::to_string(k) + " out of range");
    }
    const auto lines = torus::enumerate_modes(t, mu_max);

    std::string text;
    if (c.format == Format::Json) {
        ordered_json doc;
        doc["n"] = n;
        doc["mu_max"] = mu_max.to_string();
        doc["degrees"] = degrees;
        doc["lines"] = ordered_json::array();
        for (const auto& line : lines) {
            ordered_json l;
            l["mu"] = line.mu.to_string();
            l["lambda"] = lambda_text(line.mu);
            if (c.approx) l["lambda_approx"] = verifier::approximate_lambda(line.mu);
            l["N"] = line.mode_count();
            l["b"] = ordered_json::array();
            for (int k : degrees) l["b"].push_back(line.b(n, k));
            doc["lines"].push_back(std::move(l));
        }
        text = doc.dump(2) + "\n";
    } else if (c.format == Format::Csv) {
        std::ostringstream os;
        os << "\"mu\",\"N\"";
        for (int k : degrees) os << ",\"b" << k << '"';
        os << '\n';
        for (const auto& line : lines) {
            os << csv_quote(line.mu.to_string()) << ',' << line.mode_count();
            for (int k : degrees) os << ',' << line.b(n, k);
            os << '\n';
        }
        text = os.str();
    } else {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> head{"lambda"};
        if (c.approx) head.push_back("approx");
        head.push_back("N");
        for (int k : degrees) head.push_back("b" + std::to_string(k));
        rows.push_back(head);
        for (const auto& line : lines) {
            std::vector<std::string> row{lambda_text(line.mu)};
            if (c.approx) row.push_back(verifier::approximate_lambda(line.mu));
            row.push_back(std::to_string(line.mode_count()));
            for (int k : degrees) row.push_back(std::to_string(line.b(n, k)));
            rows.push_back(std::move(row));
        }
        text = render_rows(rows);
    }
    emit(c, text, out);
    return kPass;
}

int cmd_diamond(const RunConfig& c, std::ostream& out) {
    require_torus(c, "diamond");
    const auto t = load_torus(c.input);
    const Rational mu = parse_mu(c.mu, "--mu");
    const int n = t.n();
    auto lines = torus::enumerate_modes(t, mu);
    if (lines.empty() || lines.back().mu != mu) {
        throw Error(ErrorKind::UnknownEigenvalue, "4π²·" + mu.to_string() + " is not an eigenvalue of this torus");
    }
    lines.erase(lines.begin(), lines.end() - 1);
    // The Hodge numbers are read off the kernels of the assembled package.
    verifier::BatteryOptions options;
    options.checks = std::set<std::string>{};
    const auto report = verifier::run_battery(n, verifier::torus_components(t, lines), options);
    if (!report.valid || report.lines.size() != 1) {
        throw Error(ErrorKind::UnknownEigenvalue, "could not isolate the line 4π²·" + mu.to_string());
    }
    const auto& h = report.lines.front().h;

    std::string text;
    if (c.format == Format::Json) {
        ordered_json doc;
        doc["n"] = n;
        doc["mu"] = mu.to_string();
        doc["lambda"] = lambda_text(mu);
        if (c.approx) doc["lambda_approx"] = verifier::approximate_lambda(mu);
        ordered_json map = ordered_json::object();
        for (auto b : verifier::bidegree_order(n)) map[b.to_string()] = h.at(b.p, b.q);
        doc["h"] = std::move(map);
        ordered_json table = ordered_json::array();
        for (int p = 0; p <= n; ++p) {
            ordered_json row = ordered_json::array();
            for (int q = 0; q <= n; ++q) row.push_back(h.at(p, q));
            table.push_back(std::move(row));
        }
        doc["table"] = std::move(table);
        text = doc.dump(2) + "\n";
    } else if (c.format == Format::Csv) {
        std::ostringstream os;
        os << "\"p\",\"q\",\"h\"\n";
        for (int p = 0; p <= n; ++p) {
            for (int q = 0; q <= n; ++q) os << p << ',' << q << ',' << h.at(p, q) << '\n';
        }
        text = os.str();
    } else {
        // Row k holds h^{k-q,q}, top row k = 2n.
        std::size_t cell = 1;
        for (int p = 0; p <= n; ++p) {
            for (int q = 0; q <= n; ++q) cell = std::max(cell, std::to_string(h.at(p, q)).size());
        }
        cell += 1;
        std::ostringstream os;
        os << "lambda = " << lambda_text(mu);
        if (c.approx) os << " ~ " << verifier::approximate_lambda(mu);
        os << '\n';
        for (int k = 2 * n; k >= 0; --k) {
            const int lo = std::max(0, k - n), hi = std::min(k, n);
            const int entries = hi - lo + 1;
            std::string row((static_cast<std::size_t>(n + 1 - entries)) * cell, ' ');
            for (int p = hi; p >= lo; --p) {
                const std::string v = std::to_string(h.at(p, k - p));
                std::string slot(2 * cell, ' ');
                slot.replace(cell - (v.size() + 1) / 2, v.size(), v);
                row += slot;
            }
            while (!row.empty() && row.back() == ' ') row.pop_back();
            os << row << '\n';
        }
        text = os.str();
    }
    emit(c, text, out);
    return kPass;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    verifier::BatteryOptions options;
    options.checks = parse_checks(c.checks);
    std::vector<Rational> candidates;
    for (const auto& s : c.eigenvalues) candidates.push_back(parse_mu(s, "--eigenvalues"));
    if (!candidates.empty()) options.candidates = &candidates;

    verifier::Report report;
    if (c.mode == "torus") {
        const auto t = load_torus(c.input);
        const Rational mu_max = parse_mu(c.mu_max, "--mu-max");
        options.window = mu_max;
        options.covered = mu_max;
        report = verifier::run_battery(t.n(), verifier::torus_components(t, torus::enumerate_modes(t, mu_max)), options);
    } else {
        const auto pkg = verifier::load_package(c.input);
        report = verifier::run_battery(pkg.n, verifier::split_components(pkg), options);
    }

    std::string text;
    switch (c.format) {
    case Format::Json: text = verifier::to_json(report, c.approx).dump(2) + "\n"; break;
    case Format::Csv: text = verifier::render_csv(report); break;
    case Format::Text: text = verifier::render_text(report, c.approx); break;
    }
    emit(c, text, out);
    return report.all_pass() ? kPass : kVerdictFailure;
}

int cmd_export(const RunConfig& c, std::ostream& out) {
    require_torus(c, "export");
    const auto t = load_torus(c.input);
    const Rational mu_max = parse_mu(c.mu_max, "--mu-max");
    const auto lines = torus::enumerate_modes(t, mu_max);
    const auto pkg = verifier::torus_package(t, lines);
    verifier::save_package(pkg, c.out);
    out << "wrote " << c.out << ": n = " << pkg.n << ", dim = " << pkg.total_dim() << ", " << lines.size()
        << (lines.size() == 1 ? " line\n" : " lines\n");
    return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Exact Hodge-theoretic spectral checks on flat complex tori", "eigenhodge"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
    auto common = [&](CLI::App* sub, bool output) {
        sub->add_option("--input", c.input, "Torus file or package file")->required();
        sub->add_option("--mode", c.mode, "Input kind")->check(CLI::IsMember({"torus", "package"}));
        if (output) {
            sub->add_option("--format", c.format, "Output format")
                ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
            sub->add_option("--out", c.out, "Write output to this file");
            sub->add_flag("--approx", c.approx, "Also print decimal values of lambda");
        }
    };

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues with mode counts and Betti multiplicities");
    common(spectrum, true);
    spectrum->add_option("--mu-max", c.mu_max, "Largest |v|^2 to enumerate (rational)");
    spectrum->add_option("--degree", c.degrees, "Only these form degrees")->delimiter(',');

    auto* diamond = app.add_subcommand("diamond", "Hodge diamond of one eigenvalue");
    common(diamond, true);
    diamond->add_option("--mu", c.mu, "Eigenvalue as |v|^2 (rational)")->required();

    auto* verify = app.add_subcommand("verify", "Run the identity and theorem battery");
    common(verify, true);
    verify->add_option("--mu-max", c.mu_max, "Largest |v|^2 to enumerate (torus mode)");
    verify->add_option("--checks", c.checks, "Comma-separated check ids, or all")->delimiter(',');
    verify->add_option("--eigenvalues", c.eigenvalues, "Candidate eigenvalues for non-diagonal packages")
        ->delimiter(',');

    auto* exp = app.add_subcommand("export", "Write a torus truncation as a package file");
    common(exp, false);
    exp->add_option("--mu-max", c.mu_max, "Largest |v|^2 to enumerate (rational)");
    exp->add_option("--out", c.out, "Package file to write")->required();

    std::vector<std::string> argv_store{"eigenhodge"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParse;
    }

    try {
        exterior::self_test();
        if (spectrum->parsed()) return cmd_spectrum(c, out);
        if (diamond->parsed()) return cmd_diamond(c, out);
        if (verify->parsed()) return cmd_verify(c, out);
        return cmd_export(c, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    }
}

}  // namespace eigenhodge::cli
