#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace eigenhodge::exterior {

struct Bidegree {
    int p = 0;
    int q = 0;

    int degree() const { return p + q; }
    /// "p,q" -- also the key format of the package file.
    std::string to_string() const { return std::to_string(p) + "," + std::to_string(q); }

    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// dz_S ^ dzbar_T, stored as bit masks over {0..n-1}.
struct FormBasisIndex {
    std::uint32_t holo = 0;
    std::uint32_t antiholo = 0;

    int p() const { return __builtin_popcount(holo); }
    int q() const { return __builtin_popcount(antiholo); }
    Bidegree bidegree() const { return {p(), q()}; }
    /// 1-based ascending index lists.
    std::vector<int> S() const;
    std::vector<int> T() const;
    /// e.g. "dz1^dz2^dzb1", or "1" for the constant form.
    std::string to_string() const;

    friend bool operator==(const FormBasisIndex&, const FormBasisIndex&) = default;
};

struct IndexRange {
    std::size_t offset = 0;
    std::size_t size = 0;
};

/// Ordered basis of the complexified exterior algebra of C^n.
///
/// Global order: by degree k ascending; inside a degree, by bidegree with p
/// descending ((k,0) first); inside a bidegree, lexicographically on (S, T).
/// Every (p,q) block and every degree is a contiguous range. This order is
/// part of the public contract: serialized matrices are expressed in it.
class GradedBasis {
public:
    explicit GradedBasis(int n);

    int n() const { return n_; }
    std::size_t size() const { return elements_.size(); }

    const FormBasisIndex& element(std::size_t global) const { return elements_[global]; }
    std::size_t index_of(const FormBasisIndex& e) const { return lookup_[(e.holo << n_) | e.antiholo]; }

    IndexRange degree_range(int k) const;
    IndexRange bidegree_range(Bidegree b) const;
    /// Bidegrees of degree k in basis order.
    std::vector<Bidegree> bidegrees_of_degree(int k) const;

    std::size_t dim(Bidegree b) const { return bidegree_range(b).size; }
    std::size_t dim(int k) const { return degree_range(k).size; }

private:
    int n_;
    std::vector<FormBasisIndex> elements_;
    std::vector<std::size_t> lookup_;
    std::vector<IndexRange> bidegree_ranges_;  // (p, q) -> p * (n + 1) + q
    std::vector<IndexRange> degree_ranges_;
};

std::size_t binomial(int n, int k);

}  // namespace eigenhodge::exterior
