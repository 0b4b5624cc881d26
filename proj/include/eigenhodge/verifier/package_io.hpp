#pragma once

#include <string>

#include "json.hpp"

#include "eigenhodge/verifier/package.hpp"

namespace eigenhodge::verifier {

/// Package document:
///   {"n": 1, "dims": {"0,0": 4, ...},
///    "gram": {"p,q": [[...], ...]}, "partial": {...}, "dbar": {...},
///    "L": {...}, "conj": {...}}
/// Matrices are row-major arrays of number strings ("1/2", "3-2i").
/// Absent maps are zero; an absent Gram block is the identity.
/// Throws ParseError on malformed input and ShapeMismatch on inconsistent
/// block shapes.
KahlerPackage package_from_json(const nlohmann::json& doc);
nlohmann::ordered_json package_to_json(const KahlerPackage& pkg);

/// Throws IoError when the file cannot be read or written.
KahlerPackage load_package(const std::string& path);
void save_package(const KahlerPackage& pkg, const std::string& path);

/// Reads a whole file / parses JSON text with ParseError on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
nlohmann::json parse_json(const std::string& text, const std::string& what);

ExactMatrix matrix_from_json(const nlohmann::json& rows, const std::string& what);
nlohmann::ordered_json matrix_to_json(const ExactMatrix& m);

Bidegree parse_bidegree(const std::string& key);

}  // namespace eigenhodge::verifier
