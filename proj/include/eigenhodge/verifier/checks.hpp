#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eigenhodge/verifier/package.hpp"

namespace eigenhodge::verifier {

/// Stable check-id vocabulary, in report order.
const std::vector<std::string>& check_ids();
bool is_check_id(const std::string& id);
/// Position of an id in check_ids(); unknown ids sort last.
std::size_t check_rank(const std::string& id);

struct Witness {
    enum class Kind { None, Dimensions, BasisVector, Values };
    Kind kind = Kind::None;
    std::int64_t lhs = 0;  // Dimensions: the two compared numbers
    std::int64_t rhs = 0;
    std::size_t index = 0;  // BasisVector: global index of the basis vector e_j
    std::size_t row = 0;    // first global row where the two sides differ
    Bidegree block{};       // bidegree of e_j
    std::string lhs_value;  // Values: exact numbers as strings
    std::string rhs_value;
    std::string at;         // optional context, e.g. the mu of a spectrum witness

    static Witness dims(std::int64_t lhs, std::int64_t rhs);
};

struct Verdict {
    std::string id;    // e.g. "T1.1"
    std::string name;  // e.g. "k=1 sum"
    bool pass = true;
    Witness witness;
};

/// Sorts by check id (vocabulary order), keeping insertion order within an id.
void sort_verdicts(std::vector<Verdict>& verdicts);

/// (p,q)-indexed table of counts with 0 <= p,q <= n; out-of-range reads are 0.
class Table {
public:
    Table() = default;
    explicit Table(int n) : n_(n), cells_(static_cast<std::size_t>((n + 1) * (n + 1)), 0) {}

    int n() const { return n_; }
    std::size_t at(int p, int q) const;
    std::size_t& at(int p, int q);
    Table& operator+=(const Table& other);
    friend bool operator==(const Table&, const Table&) = default;

private:
    int n_ = 0;
    std::vector<std::size_t> cells_;
};

/// Dimensions of the exact/coexact parts of one eigenvalue line.
struct SplitDims {
    std::vector<std::size_t> d_exact;    // dim d E^{k-1}, per k
    std::vector<std::size_t> d_coexact;  // dim d* E^{k+1}, per k
    Table exact;                         // dim dbar E^{(p,q-1)}
    Table coexact;                       // dim dbar* E^{(p,q+1)}
};

/// Exact dimensions and ranks gathered on one eigenvalue line. Operators are
/// block-diagonal over components, so every entry is a sum over components.
struct LineMeasurements {
    int n = 0;
    Rational mu;
    std::vector<std::size_t> b;        // dim ker(Delta_k - mu), per k
    Table h;                           // dim ker(Delta_pq - mu)
    std::vector<std::size_t> stacked;  // rank of the stacked (p,q) bases of degree k
    Table conj_image;                  // rank of C conj(B_pq)
    Table conj_joint;                  // rank of [B_qp | C conj(B_pq)]
    std::vector<std::size_t> lefschetz;        // index i: rank of L^i on E^{n-i}
    std::vector<std::size_t> lefschetz_joint;  // index i: rank of [E^{n+i} | L^i E^{n-i}]

    // Only meaningful when mu > 0.
    std::size_t dbar_on_00 = 0;  // rank of dbar on E^{(0,0)}
    SplitDims split;
    std::vector<std::size_t> d_joint;  // rank of [d E^{k-1} | d* E^{k+1}]
    Table dbar_joint;                  // rank of [dbar E^{(p,q-1)} | dbar* E^{(p,q+1)}]
    Table e6_rank;                     // rank of dbar on a basis of the coexact part
    Table e7_rank;                     // rank of dbar* omega on a basis of the exact part

    explicit LineMeasurements(int n = 0, Rational mu = Rational());
    LineMeasurements& operator+=(const LineMeasurements& other);
};

/// Eigenspace bases of one component for one eigenvalue, as columns in the
/// component's total-space coordinates, per (p,q).
struct EigenPiece {
    Rational mu;
    std::map<Bidegree, ExactMatrix> basis;
};

/// Identity verdicts for one component; witnesses use the component's global
/// indices. Also covers the conjugation axioms.
std::vector<Verdict> validate_component(const DerivedOperators& ops, const Component& component);

/// Folds per-component identity verdicts: a verdict fails if it fails on any
/// component, with the witness of smallest global index.
void merge_identity_verdicts(std::vector<Verdict>& into, const std::vector<Verdict>& more);

/// validate_package for a whole package: splits, derives and validates.
std::vector<Verdict> validate_package(const KahlerPackage& pkg);

/// Eigenvalues of a component's Laplacian. Scalar and diagonal Laplacians
/// are read off exactly; otherwise `candidates` are tried. Returns the
/// eigenspaces found, and sets `covered` to the summed dimension.
std::vector<EigenPiece> eigen_pieces(const DerivedOperators& ops, const std::vector<Rational>* candidates,
                                     std::size_t& covered);

/// Measures one eigen piece. `omega` replaces L in the map
/// alpha -> dbar*(omega ^ alpha) when given (negative controls).
LineMeasurements measure(const DerivedOperators& ops, const EigenPiece& piece, const ExactMatrix* omega = nullptr);

/// Hodge decomposition, conjugation symmetry and hard Lefschetz.
std::vector<Verdict> check_theorem1(const LineMeasurements& m);

/// Dimension-only consequences (a)-(g), evaluated on b and h.
std::vector<Verdict> check_corollary1(int n, const std::vector<std::size_t>& b, const Table& h);

/// Throws ZeroEigenvalueLine when mu = 0.
SplitDims split_exact_coexact(const LineMeasurements& m);
std::vector<Verdict> check_split(const LineMeasurements& m);
std::vector<Verdict> check_degree0_lemma(const LineMeasurements& m);
std::vector<Verdict> check_theorem2(const LineMeasurements& m);

/// Positive spectrum comparisons on a set of lines. `window` is the mu range
/// to compare and `covered` the range over which the lines are complete
/// (nullopt: complete spectrum). Throws IncompleteRange when the window
/// exceeds the covered range.
struct LineDims {
    Rational mu;
    std::vector<std::size_t> b;
};
std::vector<Verdict> compare_spectra(int n, const std::vector<LineDims>& lines, const std::optional<Rational>& window,
                                     const std::optional<Rational>& covered);

/// All per-line verdicts: theorem 1 and corollary 1 always, the rest only for
/// mu > 0.
std::vector<Verdict> check_line(const LineMeasurements& m);

}  // namespace eigenhodge::verifier
