#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eigenhodge/errors.hpp"
#include "eigenhodge/torus/torus.hpp"

namespace eigenhodge::cli {

enum Exit : int {
    kPass = 0,
    kVerdictFailure = 1,
    kParse = 2,
    kDegenerate = 3,
    kUnknownEigenvalue = 4,
    kIo = 5,
};

int exit_code(ErrorKind kind);

/// Torus file: {"n": 1, "basis": [["1","0"],["0","1"]]}; the basis matrix is
/// written row by row and its columns generate the lattice.
torus::TorusSpec parse_torus(const std::string& text, const std::string& what = "torus file");
torus::TorusSpec load_torus(const std::string& path);

/// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eigenhodge::cli
