#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "eigenhodge/exactla/linalg.hpp"
#include "eigenhodge/exterior/basis.hpp"

namespace eigenhodge::verifier {

using exterior::Bidegree;
using exterior::IndexRange;

using BlockMap = std::map<Bidegree, ExactMatrix>;

/// A finite-dimensional bigraded inner-product complex. Maps are keyed by
/// their source block; absent blocks are zero maps and an absent Gram block
/// is the identity.
struct KahlerPackage {
    int n = 0;
    std::map<Bidegree, std::size_t> dims;
    BlockMap gram;     // (p,q) -> (p,q)
    BlockMap partial;  // (p,q) -> (p+1,q)
    BlockMap dbar;     // (p,q) -> (p,q+1)
    BlockMap lefschetz;  // (p,q) -> (p+1,q+1)
    BlockMap conj;     // (p,q) -> (q,p), applied as x -> conj * conj_entries(x)

    std::size_t dim(Bidegree b) const;
    std::size_t total_dim() const;

    /// Throws ShapeMismatch when a block lies outside 0 <= p,q <= n or does
    /// not match the declared dimensions.
    void check_shapes() const;
};

/// Target block of each map family.
Bidegree partial_target(Bidegree b);
Bidegree dbar_target(Bidegree b);
Bidegree lefschetz_target(Bidegree b);
Bidegree conj_target(Bidegree b);

/// Bidegrees in total-space order: degree ascending, then p descending.
std::vector<Bidegree> bidegree_order(int n);

/// Position of every (p,q) block inside the total space.
class Layout {
public:
    Layout() = default;
    explicit Layout(const KahlerPackage& pkg);

    int n() const { return n_; }
    std::size_t total() const { return total_; }
    IndexRange range(Bidegree b) const;
    IndexRange degree_range(int k) const;
    Bidegree bidegree_of(std::size_t index) const;

private:
    int n_ = 0;
    std::size_t total_ = 0;
    std::map<Bidegree, IndexRange> ranges_;
};

/// Total-space operators derived from a package. Adjoints always come from
/// the Grams.
struct DerivedOperators {
    Layout layout;
    HermitianGram gram;
    ExactMatrix P, Q, L, C;  // C is antilinear: x -> C * conj(x)
    ExactMatrix D, D_adj, P_adj, Q_adj, Lambda, H, laplacian;
};

/// Throws ShapeMismatch, NotHermitian or NotPositiveDefinite.
DerivedOperators derive(const KahlerPackage& pkg);

/// A connected piece of a package together with the global index of each of
/// its total-space coordinates.
struct Component {
    KahlerPackage package;
    std::vector<std::size_t> global;  // local total index -> global total index
    std::vector<Bidegree> global_block;  // bidegree of each local coordinate
};

/// Splits a package into the connected components of the coupling graph of
/// all its blocks (including Gram and conjugation). `global` maps the total
/// index of pkg to a global index; empty means identity. Components are
/// ordered by their smallest global index.
std::vector<Component> split_components(const KahlerPackage& pkg, const std::vector<std::size_t>& global = {});

/// Orders a list of components by smallest global index.
void sort_components(std::vector<Component>& components);

/// Reassembles components into one package; inverse of split_components.
KahlerPackage merge_components(int n, const std::vector<Component>& components);

}  // namespace eigenhodge::verifier
