#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eigenhodge/exactla/linalg.hpp"
#include "eigenhodge/exterior/operators.hpp"

namespace eigenhodge::torus {

/// A flat torus C^n / L with L given by a rational basis.
///
/// Real coordinates of C^n are interleaved as (x_1, y_1, ..., x_n, y_n) with
/// z_j = x_j + i y_j; the columns of `basis` are the lattice generators.
class TorusSpec {
public:
    /// Validates shape, invertibility and positive definiteness of the Gram
    /// matrix basis^T basis. Throws SingularBasis.
    TorusSpec(int n, RationalMatrix basis);

    static TorusSpec standard(int n);  // Z^{2n}

    int n() const { return n_; }
    const RationalMatrix& basis() const { return basis_; }
    RationalMatrix gram() const { return basis_.transpose() * basis_; }

private:
    int n_;
    RationalMatrix basis_;
};

/// A vector v of the dual lattice L*.
struct DualVector {
    std::vector<std::int64_t> coeffs;  // coordinates in the dual basis
    std::vector<Rational> real_coords;  // dual_basis * coeffs
    exterior::Covector covector;        // w_j = a_j + i b_j from (a_j, b_j)
    Rational norm_sq;

    bool is_zero() const;
};

/// All dual vectors sharing one exact value mu = |v|^2; the Laplacian
/// eigenvalue is 4 pi^2 mu.
struct SpectralLine {
    Rational mu;
    std::vector<DualVector> modes;  // lexicographic on coeffs
    /// (v, -v) index pairs; v is the member whose first nonzero coefficient is
    /// positive. The zero mode is paired with itself.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    std::size_t mode_count() const { return modes.size(); }
    /// N(mu) * C(2n, k)
    std::size_t b(int n, int k) const;
    /// N(mu) * C(n, p) * C(n, q)
    std::size_t h(int n, exterior::Bidegree bd) const;
};

/// Columns generate L*: the inverse transpose of the basis.
RationalMatrix dual_lattice(const TorusSpec& t);

/// Builds a DualVector from dual-basis coordinates.
DualVector make_dual_vector(const TorusSpec& t, const RationalMatrix& dual, std::vector<std::int64_t> coeffs);

/// Every v in L* with |v|^2 <= mu_max, grouped by exact |v|^2 and sorted by mu.
/// The search is a Fincke-Pohst descent driven by the rational LDL^T of the
/// dual Gram matrix; no floating point is involved.
std::vector<SpectralLine> enumerate_modes(const TorusSpec& t, const Rational& mu_max);

/// Normalized per-mode operators. On the Fourier mode exp(2 pi i <v, x>),
/// d = 2 pi i D, del = 2 pi i P, dbar = 2 pi i Q and Delta = 4 pi^2 laplacian.
struct ModeOperators {
    ExactMatrix D, D_adj;
    ExactMatrix P, P_adj;
    ExactMatrix Q, Q_adj;
    ExactMatrix L, Lambda, H;
    ExactMatrix laplacian;
};

/// Throws NotInDualLattice when <b, v> is not an integer for some generator b.
ModeOperators mode_operators(const TorusSpec& t, const DualVector& v, const exterior::KahlerExterior& ext);

/// Dense model of one spectral line: the direct sum over its modes of the
/// full exterior algebra, with every operator extended block-diagonally.
/// Sized N(mu) * 4^n, so meant for small lines.
struct AssembledLine {
    Rational mu;
    int n = 0;
    std::size_t modes = 0;
    std::size_t block = 0;  // 4^n
    ExactMatrix D, D_adj, P, P_adj, Q, Q_adj, L, Lambda, H, laplacian;
    /// Antilinear conjugation: x -> conj * conj_entries(x). Sends mode v to -v.
    ExactMatrix conj;
};

AssembledLine assemble_line(const TorusSpec& t, const SpectralLine& line, const exterior::KahlerExterior& ext);

struct LabeledSubspace {
    ExactMatrix basis;  // columns in AssembledLine coordinates
    std::vector<std::pair<std::size_t, std::size_t>> labels;  // (mode, exterior index) per column
};

/// The degree-k (or (p,q)) part of the assembled line, block by block.
LabeledSubspace assemble_eigenspace(const AssembledLine& line, const exterior::GradedBasis& basis, int degree);
LabeledSubspace assemble_eigenspace(const AssembledLine& line, const exterior::GradedBasis& basis,
                                    exterior::Bidegree bidegree);

}  // namespace eigenhodge::torus
