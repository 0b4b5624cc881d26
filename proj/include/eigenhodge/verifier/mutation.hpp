#pragma once

#include <string>
#include <vector>

#include "eigenhodge/verifier/package.hpp"

namespace eigenhodge::verifier {

enum class Family { Gram, Partial, Dbar, Lefschetz, Conj };

const char* to_string(Family f);

/// A single-block edit of a package, used for negative controls.
struct Mutation {
    enum class Kind { Scale, FlipEntry, Zero };  // FlipEntry: first nonzero of the densest column
    Family family;
    Bidegree block;
    Kind kind;
    GaussianRational factor{1};  // Scale only

    std::string describe() const;
};

/// Throws DimensionMismatch when the block is absent or has no nonzero entry.
KahlerPackage mutate(const KahlerPackage& pkg, const Mutation& m);

/// The negative-control suite: sign flips, scalings and zeroed blocks over
/// every map family, restricted to blocks that exist and are nonzero in pkg.
std::vector<Mutation> negative_controls(const KahlerPackage& pkg);

}  // namespace eigenhodge::verifier
