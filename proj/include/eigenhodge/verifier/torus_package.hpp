#pragma once

#include <vector>

#include "eigenhodge/torus/torus.hpp"
#include "eigenhodge/verifier/package.hpp"

namespace eigenhodge::verifier {

/// Spectral package of a flat torus truncated at the given lines, as
/// connected components. Per mode v the maps are del/2pi = i (theta^{1,0} ^)
/// and dbar/2pi = i (theta^{0,1} ^), the Laplacian is |v|^2 and conjugation
/// sends mode v to mode -v.
///
/// Global layout: inside each (p,q) block, lines by mu, then pairs in line
/// order, then v before -v, then exterior basis order.
std::vector<Component> torus_components(const torus::TorusSpec& t, const std::vector<torus::SpectralLine>& lines);

/// The same package as a single object (for export).
KahlerPackage torus_package(const torus::TorusSpec& t, const std::vector<torus::SpectralLine>& lines);

}  // namespace eigenhodge::verifier
