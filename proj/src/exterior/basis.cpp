#include "eigenhodge/exterior/basis.hpp"

#include "eigenhodge/errors.hpp"

namespace eigenhodge::exterior {

namespace {

std::vector<int> bits_to_indices(std::uint32_t mask) {
    std::vector<int> out;
    for (int j = 0; mask >> j; ++j) {
        if (mask & (1u << j)) out.push_back(j + 1);
    }
    return out;
}

/// Masks of size k over n bits in lexicographic order of their index lists.
void subsets_lex(int n, int k, int start, std::uint32_t acc, std::vector<std::uint32_t>& out) {
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    for (int j = start; j <= n - k; ++j) subsets_lex(n, k - 1, j + 1, acc | (1u << j), out);
}

}  // namespace

std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::size_t v = 1;
    for (int i = 0; i < k; ++i) v = v * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
    return v;
}

std::vector<int> FormBasisIndex::S() const { return bits_to_indices(holo); }
std::vector<int> FormBasisIndex::T() const { return bits_to_indices(antiholo); }

std::string FormBasisIndex::to_string() const {
    std::string out;
    for (int s : S()) out += (out.empty() ? "" : "^") + std::string("dz") + std::to_string(s);
    for (int t : T()) out += (out.empty() ? "" : "^") + std::string("dzb") + std::to_string(t);
    return out.empty() ? "1" : out;
}

GradedBasis::GradedBasis(int n) : n_(n) {
    if (n < 0 || n > 10) {
        throw Error(ErrorKind::DimensionMismatch, "complex dimension must be in [0, 10]");
    }
    bidegree_ranges_.resize(static_cast<std::size_t>((n + 1) * (n + 1)));
    degree_ranges_.resize(static_cast<std::size_t>(2 * n + 1));
    lookup_.assign(std::size_t{1} << (2 * n), 0);
    std::vector<std::vector<std::uint32_t>> subsets(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) subsets_lex(n, k, 0, 0, subsets[static_cast<std::size_t>(k)]);

    for (int k = 0; k <= 2 * n; ++k) {
        degree_ranges_[static_cast<std::size_t>(k)].offset = elements_.size();
        for (int p = std::min(k, n); p >= std::max(0, k - n); --p) {
            int q = k - p;
            IndexRange& range = bidegree_ranges_[static_cast<std::size_t>(p * (n + 1) + q)];
            range.offset = elements_.size();
            for (auto s : subsets[static_cast<std::size_t>(p)]) {
                for (auto t : subsets[static_cast<std::size_t>(q)]) {
                    lookup_[(s << n) | t] = elements_.size();
                    elements_.push_back({s, t});
                }
            }
            range.size = elements_.size() - range.offset;
        }
        degree_ranges_[static_cast<std::size_t>(k)].size =
            elements_.size() - degree_ranges_[static_cast<std::size_t>(k)].offset;
    }
}

IndexRange GradedBasis::degree_range(int k) const {
    if (k < 0 || k > 2 * n_) return {0, 0};
    return degree_ranges_[static_cast<std::size_t>(k)];
}

IndexRange GradedBasis::bidegree_range(Bidegree b) const {
    if (b.p < 0 || b.q < 0 || b.p > n_ || b.q > n_) return {0, 0};
    return bidegree_ranges_[static_cast<std::size_t>(b.p * (n_ + 1) + b.q)];
}

std::vector<Bidegree> GradedBasis::bidegrees_of_degree(int k) const {
    std::vector<Bidegree> out;
    for (int p = std::min(k, n_); p >= std::max(0, k - n_); --p) out.push_back({p, k - p});
    return out;
}

}  // namespace eigenhodge::exterior
