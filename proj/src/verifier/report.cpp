#include "eigenhodge/verifier/report.hpp"

#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

namespace eigenhodge::verifier {

using nlohmann::ordered_json;

std::vector<const Verdict*> Report::verdicts() const {
    std::vector<const Verdict*> out;
    for (const auto& v : validation) out.push_back(&v);
    for (const auto& line : lines) {
        for (const auto& v : line.verdicts) out.push_back(&v);
    }
    for (const auto& v : spectrum) out.push_back(&v);
    return out;
}

std::size_t Report::passed() const {
    std::size_t k = 0;
    for (const auto* v : verdicts()) k += v->pass ? 1 : 0;
    return k;
}

std::size_t Report::failed() const { return verdicts().size() - passed(); }

namespace {

bool keep(const BatteryOptions& options, const Verdict& v) {
    return !options.checks || options.checks->contains(v.id);
}

void filter(std::vector<Verdict>& verdicts, const BatteryOptions& options, bool keep_failures) {
    std::erase_if(verdicts, [&](const Verdict& v) { return !keep(options, v) && !(keep_failures && !v.pass); });
}

}  // namespace

Report run_battery(int n, const std::vector<Component>& components, const BatteryOptions& options) {
    Report r;
    r.n = n;
    std::vector<Verdict> identities;
    merge_identity_verdicts(identities, {});
    std::map<Rational, LineMeasurements> lines;
    if (options.candidates != nullptr) {
        for (const auto& mu : *options.candidates) lines.try_emplace(mu, n, mu);
    }
    std::size_t covered = 0;
    bool valid = true;
    for (const auto& comp : components) {
        const auto ops = derive(comp.package);
        r.total_dim += ops.layout.total();
        const auto verdicts = validate_component(ops, comp);
        merge_identity_verdicts(identities, verdicts);
        for (const auto& v : verdicts) valid = valid && v.pass;
        if (!valid) continue;
        std::size_t cov = 0;
        for (const auto& piece : eigen_pieces(ops, options.candidates, cov)) {
            lines.try_emplace(piece.mu, n, piece.mu).first->second += measure(ops, piece);
        }
        covered += cov;
    }
    r.valid = valid;
    r.validation = std::move(identities);
    sort_verdicts(r.validation);
    filter(r.validation, options, true);
    if (!valid) return r;
    if (covered != r.total_dim) {
        throw Error(ErrorKind::IncompleteSpectrum, "eigenspaces cover " + std::to_string(covered) + " of " +
                                                       std::to_string(r.total_dim) + " dimensions");
    }

    std::vector<LineDims> dims;
    for (auto& [mu, m] : lines) {
        LineReport line{mu, m.b, m.h, std::nullopt, check_line(m)};
        if (mu.sign() > 0) line.split = m.split;
        filter(line.verdicts, options, false);
        dims.push_back({mu, m.b});
        r.lines.push_back(std::move(line));
    }
    r.spectrum = compare_spectra(n, dims, options.window, options.covered);
    sort_verdicts(r.spectrum);
    filter(r.spectrum, options, false);
    return r;
}

std::string approximate_lambda(const Rational& mu) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", 4.0 * std::numbers::pi * std::numbers::pi * mu.to_double());
    return buf;
}

namespace {

std::string symbolic_lambda(const Rational& mu) { return "4π²·" + mu.to_string(); }

ordered_json witness_json(const Witness& w) {
    ordered_json j = ordered_json::object();
    switch (w.kind) {
    case Witness::Kind::None: break;
    case Witness::Kind::Dimensions:
        j["lhs"] = w.lhs;
        j["rhs"] = w.rhs;
        break;
    case Witness::Kind::BasisVector:
        j["basis_vector"] = w.index;
        j["bidegree"] = w.block.to_string();
        j["row"] = w.row;
        break;
    case Witness::Kind::Values:
        j["lhs"] = w.lhs_value;
        j["rhs"] = w.rhs_value;
        break;
    }
    if (!w.at.empty()) j["at"] = w.at;
    return j;
}

std::string witness_text(const Witness& w) {
    std::string s;
    switch (w.kind) {
    case Witness::Kind::None: break;
    case Witness::Kind::Dimensions: s = std::to_string(w.lhs) + " vs " + std::to_string(w.rhs); break;
    case Witness::Kind::BasisVector:
        s = "basis vector " + std::to_string(w.index) + " (" + w.block.to_string() + "), row " + std::to_string(w.row);
        break;
    case Witness::Kind::Values: s = w.lhs_value + " vs " + w.rhs_value; break;
    }
    if (!w.at.empty()) s += (s.empty() ? "" : " ") + std::string("at ") + w.at;
    return s;
}

ordered_json table_json(const Table& t) {
    ordered_json j = ordered_json::object();
    for (auto b : bidegree_order(t.n())) j[b.to_string()] = t.at(b.p, b.q);
    return j;
}

}  // namespace

ordered_json to_json(const Verdict& v) {
    ordered_json j;
    j["check"] = v.id;
    j["name"] = v.name;
    j["pass"] = v.pass;
    if (v.witness.kind != Witness::Kind::None) j["witness"] = witness_json(v.witness);
    return j;
}

ordered_json to_json(const Report& r, bool approx) {
    ordered_json j;
    j["n"] = r.n;
    j["dim"] = r.total_dim;
    j["valid"] = r.valid;
    j["summary"] = {{"passed", r.passed()}, {"failed", r.failed()}};
    j["validation"] = ordered_json::array();
    for (const auto& v : r.validation) j["validation"].push_back(to_json(v));
    j["lines"] = ordered_json::array();
    for (const auto& line : r.lines) {
        ordered_json l;
        l["mu"] = line.mu.to_string();
        l["lambda"] = symbolic_lambda(line.mu);
        if (approx) l["lambda_approx"] = approximate_lambda(line.mu);
        l["b"] = line.b;
        l["h"] = table_json(line.h);
        if (line.split) {
            ordered_json s;
            s["d_exact"] = line.split->d_exact;
            s["d_coexact"] = line.split->d_coexact;
            s["dbar_exact"] = table_json(line.split->exact);
            s["dbar_coexact"] = table_json(line.split->coexact);
            l["split"] = std::move(s);
        }
        l["verdicts"] = ordered_json::array();
        for (const auto& v : line.verdicts) l["verdicts"].push_back(to_json(v));
        j["lines"].push_back(std::move(l));
    }
    j["spectrum"] = ordered_json::array();
    for (const auto& v : r.spectrum) j["spectrum"].push_back(to_json(v));
    return j;
}

std::string render_text(const Report& r, bool approx) {
    std::ostringstream os;
    os << "n = " << r.n << ", dim = " << r.total_dim << (r.valid ? "" : ", identities FAIL") << "\n";
    for (const auto& line : r.lines) {
        os << "lambda = " << symbolic_lambda(line.mu);
        if (approx) os << " ~ " << approximate_lambda(line.mu);
        os << "  b =";
        for (auto x : line.b) os << ' ' << x;
        os << '\n';
    }
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> counts;  // rank -> (pass, fail)
    std::vector<std::pair<std::string, const Verdict*>> failures;
    auto tally = [&](const Verdict& v, const std::string& where) {
        auto& c = counts[check_rank(v.id)];
        (v.pass ? c.first : c.second)++;
        if (!v.pass) failures.emplace_back(where, &v);
    };
    for (const auto& v : r.validation) tally(v, "package");
    for (const auto& line : r.lines) {
        for (const auto& v : line.verdicts) tally(v, "mu=" + line.mu.to_string());
    }
    for (const auto& v : r.spectrum) tally(v, "spectrum");
    os << "\ncheck          pass  fail\n";
    for (const auto& [rank, c] : counts) {
        char buf[96];
        const std::string& id = rank < check_ids().size() ? check_ids()[rank] : "?";
        std::snprintf(buf, sizeof buf, "%-12s %6zu %5zu\n", id.c_str(), c.first, c.second);
        os << buf;
    }
    for (const auto& [where, v] : failures) {
        os << "FAIL " << v->id << " [" << where << "] " << v->name << ": " << witness_text(v->witness) << '\n';
    }
    os << "\n" << r.passed() << " passed, " << r.failed() << " failed\n";
    return os.str();
}

std::string render_csv(const Report& r) {
    std::ostringstream os;
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"') out += '"';
            out += ch;
        }
        return out + "\"";
    };
    os << "mu,check,name,pass,witness\n";
    auto row = [&](const std::string& mu, const Verdict& v) {
        os << quote(mu) << ',' << quote(v.id) << ',' << quote(v.name) << ',' << (v.pass ? "true" : "false") << ','
           << quote(witness_text(v.witness)) << '\n';
    };
    for (const auto& v : r.validation) row("", v);
    for (const auto& line : r.lines) {
        for (const auto& v : line.verdicts) row(line.mu.to_string(), v);
    }
    for (const auto& v : r.spectrum) row("", v);
    return os.str();
}

}  // namespace eigenhodge::verifier
