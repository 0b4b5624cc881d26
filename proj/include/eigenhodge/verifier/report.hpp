#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "eigenhodge/verifier/checks.hpp"

namespace eigenhodge::verifier {

struct LineReport {
    Rational mu;
    std::vector<std::size_t> b;
    Table h;
    std::optional<SplitDims> split;  // present when mu > 0
    std::vector<Verdict> verdicts;
};

struct Report {
    int n = 0;
    std::size_t total_dim = 0;
    bool valid = true;                // every identity verdict passed
    std::vector<Verdict> validation;  // K.* and conjugation axioms
    std::vector<LineReport> lines;    // sorted by mu
    std::vector<Verdict> spectrum;    // S.*

    std::size_t passed() const;
    std::size_t failed() const;
    bool all_pass() const { return failed() == 0; }
    /// Every verdict, in report order.
    std::vector<const Verdict*> verdicts() const;
};

struct BatteryOptions {
    /// Candidate eigenvalues for components whose Laplacian is not diagonal.
    const std::vector<Rational>* candidates = nullptr;
    /// Spectrum comparison window and the range over which lines are complete.
    std::optional<Rational> window;
    std::optional<Rational> covered;
    /// When set, only these check ids are kept in the report. Identity
    /// failures are always kept.
    std::optional<std::set<std::string>> checks;
};

/// Validates every component; if all identities hold, decomposes the
/// eigenspaces and runs the per-line and spectrum checks. Throws
/// IncompleteSpectrum when the eigenspaces found do not exhaust the space.
Report run_battery(int n, const std::vector<Component>& components, const BatteryOptions& options = {});

/// Decimal approximation of 4 pi^2 mu.
std::string approximate_lambda(const Rational& mu);

/// JSON rendering; deterministic and independent of how the package was
/// produced.
nlohmann::ordered_json to_json(const Verdict& v);
nlohmann::ordered_json to_json(const Report& r, bool approx = false);
std::string render_text(const Report& r, bool approx = false);
std::string render_csv(const Report& r);

}  // namespace eigenhodge::verifier
