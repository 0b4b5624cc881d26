#pragma once

#include <stdexcept>
#include <string>

namespace eigenhodge {

enum class ErrorKind {
    ParseError,
    NotHermitian,
    NotPositiveDefinite,
    DimensionMismatch,
    ShapeMismatch,
    SingularBasis,
    NotInDualLattice,
    IncompleteSpectrum,
    ZeroEigenvalueLine,
    IncompleteRange,
    UnknownEigenvalue,
    IoError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SingularBasis: return "SingularBasis";
    case ErrorKind::NotInDualLattice: return "NotInDualLattice";
    case ErrorKind::IncompleteSpectrum: return "IncompleteSpectrum";
    case ErrorKind::ZeroEigenvalueLine: return "ZeroEigenvalueLine";
    case ErrorKind::IncompleteRange: return "IncompleteRange";
    case ErrorKind::UnknownEigenvalue: return "UnknownEigenvalue";
    case ErrorKind::IoError: return "IoError";
    }
    return "Error";
}

}  // namespace eigenhodge
