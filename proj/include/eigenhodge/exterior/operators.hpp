#pragma once

#include <vector>

#include "eigenhodge/exactla/linalg.hpp"
#include "eigenhodge/exterior/basis.hpp"

namespace eigenhodge::exterior {

enum class WedgePart { Full, Holo, Antiholo };

/// Real covector theta = sum_j (conj(w_j)/2) dz_j + (w_j/2) dzbar_j, given by
/// its (0,1)-coefficients w. For theta = sum a_j dx_j + b_j dy_j, w_j = a_j + i b_j.
struct Covector {
    std::vector<GaussianRational> w;

    int n() const { return static_cast<int>(w.size()); }
    /// |theta|^2 under the Kahler metric; equals sum_j |w_j|^2.
    Rational norm_sq() const;
};

/// Matrix of alpha -> dz_j ^ alpha on the full algebra (j is 0-based).
ExactMatrix wedge_dz(const GradedBasis& basis, int j);
/// Matrix of alpha -> dzbar_j ^ alpha on the full algebra (j is 0-based).
ExactMatrix wedge_dzbar(const GradedBasis& basis, int j);

/// Matrix of alpha -> theta^{part} ^ alpha on the full algebra.
ExactMatrix wedge_matrix(const GradedBasis& basis, const Covector& theta, WedgePart part);

/// Diagonal Gram with <dz_S ^ dzbar_T, dz_S ^ dzbar_T> = 2^{p+q}.
HermitianGram gram(const GradedBasis& basis);
HermitianGram gram(const GradedBasis& basis, int degree);
HermitianGram gram(const GradedBasis& basis, Bidegree bidegree);

/// omega ^ -, with omega = (i/2) sum_j dz_j ^ dzbar_j.
ExactMatrix lefschetz_L(const GradedBasis& basis);
/// Metric adjoint of lefschetz_L.
ExactMatrix lefschetz_Lambda(const GradedBasis& basis);
/// Acts by (n - k) on forms of degree k.
ExactMatrix counting_H(const GradedBasis& basis);

/// Complex conjugation of forms is antilinear: conj(x) = C * conj_entries(x).
/// C sends dz_S ^ dzbar_T to (-1)^{pq} dz_T ^ dzbar_S.
ExactMatrix conjugation(const GradedBasis& basis);

/// The block of `full` mapping the `from` range into the `to` range.
ExactMatrix restrict_block(const ExactMatrix& full, IndexRange from, IndexRange to);

/// Precomputed structure of the exterior algebra of C^n for repeated use.
class KahlerExterior {
public:
    explicit KahlerExterior(int n);

    const GradedBasis& basis() const { return basis_; }
    int n() const { return basis_.n(); }
    const HermitianGram& gram() const { return gram_; }
    const ExactMatrix& L() const { return L_; }
    const ExactMatrix& Lambda() const { return Lambda_; }
    const ExactMatrix& H() const { return H_; }
    const ExactMatrix& conj() const { return conj_; }

    ExactMatrix wedge(const Covector& theta, WedgePart part) const;

private:
    GradedBasis basis_;
    std::vector<ExactMatrix> dz_;
    std::vector<ExactMatrix> dzbar_;
    HermitianGram gram_;
    ExactMatrix L_;
    ExactMatrix Lambda_;
    ExactMatrix H_;
    ExactMatrix conj_;
};

struct Sl2Check {
    bool lambda_L = false;  // [Lambda, L] = H
    bool H_L = false;       // [H, L] = -2L
    bool H_Lambda = false;  // [H, Lambda] = 2 Lambda

    bool ok() const { return lambda_L && H_L && H_Lambda; }
};

/// Evaluates the sl2 relations for the algebra of C^n as exact identities.
Sl2Check check_sl2(int n);

/// Runs check_sl2 for n = 1, 2, 3 once per process; throws if any fails.
void self_test();

}  // namespace eigenhodge::exterior
