#include "eigenhodge/verifier/package_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace eigenhodge::verifier {

using nlohmann::json;
using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw Error(ErrorKind::IoError, "cannot read " + path);
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, what + ": " + e.what());
    }
}

Bidegree parse_bidegree(const std::string& key) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::ParseError, "bad block key \"" + key + "\"");
    auto number = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || v < 0) {
            throw Error(ErrorKind::ParseError, "bad block key \"" + key + "\"");
        }
        return v;
    };
    std::string_view sv(key);
    return {number(sv.substr(0, comma)), number(sv.substr(comma + 1))};
}

ExactMatrix matrix_from_json(const json& rows, const std::string& what) {
    if (!rows.is_array()) throw Error(ErrorKind::ParseError, what + " must be an array of rows");
    const std::size_t r = rows.size();
    std::size_t c = 0;
    if (r > 0) {
        if (!rows[0].is_array()) throw Error(ErrorKind::ParseError, what + " rows must be arrays");
        c = rows[0].size();
    }
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != c) {
            throw Error(ErrorKind::ParseError, what + " row " + std::to_string(i) + " has the wrong length");
        }
        for (std::size_t j = 0; j < c; ++j) {
            const auto& x = rows[i][j];
            if (x.is_string()) {
                m(i, j) = GaussianRational::parse(x.get<std::string>());
            } else if (x.is_number_integer()) {
                m(i, j) = GaussianRational(Rational(x.get<std::int64_t>()));
            } else {
                throw Error(ErrorKind::ParseError, what + " entries must be strings or integers");
            }
        }
    }
    return m;
}

ordered_json matrix_to_json(const ExactMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

const char* const kFamilies[] = {"gram", "partial", "dbar", "L", "conj"};

BlockMap& family(KahlerPackage& pkg, std::string_view name) {
    if (name == "gram") return pkg.gram;
    if (name == "partial") return pkg.partial;
    if (name == "dbar") return pkg.dbar;
    if (name == "L") return pkg.lefschetz;
    return pkg.conj;
}

const BlockMap& family(const KahlerPackage& pkg, std::string_view name) {
    return family(const_cast<KahlerPackage&>(pkg), name);
}

}  // namespace

KahlerPackage package_from_json(const json& doc) {
    if (!doc.is_object()) throw Error(ErrorKind::ParseError, "package must be an object");
    for (const auto& [key, value] : doc.items()) {
        bool known = key == "n" || key == "dims";
        for (const char* f : kFamilies) known = known || key == f;
        if (!known) throw Error(ErrorKind::ParseError, "unknown package field \"" + key + "\"");
    }
    KahlerPackage pkg;
    if (!doc.contains("n") || !doc["n"].is_number_integer()) throw Error(ErrorKind::ParseError, "missing integer n");
    pkg.n = doc["n"].get<int>();
    if (pkg.n < 0 || pkg.n > 10) throw Error(ErrorKind::ParseError, "n must lie in [0, 10]");
    if (doc.contains("dims")) {
        if (!doc["dims"].is_object()) throw Error(ErrorKind::ParseError, "dims must be an object");
        for (const auto& [key, value] : doc["dims"].items()) {
            if (!value.is_number_unsigned()) throw Error(ErrorKind::ParseError, "dims entries must be nonnegative");
            pkg.dims[parse_bidegree(key)] = value.get<std::size_t>();
        }
    }
    for (const char* f : kFamilies) {
        if (!doc.contains(f)) continue;
        if (!doc[f].is_object()) throw Error(ErrorKind::ParseError, std::string(f) + " must be an object");
        for (const auto& [key, value] : doc[f].items()) {
            family(pkg, f)[parse_bidegree(key)] = matrix_from_json(value, std::string(f) + " block " + key);
        }
    }
    pkg.check_shapes();
    return pkg;
}

ordered_json package_to_json(const KahlerPackage& pkg) {
    ordered_json doc;
    doc["n"] = pkg.n;
    ordered_json dims = ordered_json::object();
    for (auto b : bidegree_order(pkg.n)) dims[b.to_string()] = pkg.dim(b);
    doc["dims"] = std::move(dims);
    for (const char* f : kFamilies) {
        ordered_json blocks = ordered_json::object();
        for (auto b : bidegree_order(pkg.n)) {
            const auto& fam = family(pkg, f);
            auto it = fam.find(b);
            if (it != fam.end()) blocks[b.to_string()] = matrix_to_json(it->second);
        }
        doc[f] = std::move(blocks);
    }
    return doc;
}

KahlerPackage load_package(const std::string& path) {
    return package_from_json(parse_json(read_file(path), path));
}

void save_package(const KahlerPackage& pkg, const std::string& path) {
    write_file(path, package_to_json(pkg).dump(1) + "\n");
}

}  // namespace eigenhodge::verifier
