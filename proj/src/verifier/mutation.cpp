#include "eigenhodge/verifier/mutation.hpp"

namespace eigenhodge::verifier {

const char* to_string(Family f) {
    switch (f) {
    case Family::Gram: return "gram";
    case Family::Partial: return "partial";
    case Family::Dbar: return "dbar";
    case Family::Lefschetz: return "L";
    case Family::Conj: return "conj";
    }
    return "?";
}

namespace {

BlockMap& blocks(KahlerPackage& pkg, Family f) {
    switch (f) {
    case Family::Gram: return pkg.gram;
    case Family::Partial: return pkg.partial;
    case Family::Dbar: return pkg.dbar;
    case Family::Lefschetz: return pkg.lefschetz;
    case Family::Conj: return pkg.conj;
    }
    return pkg.conj;
}

bool nonzero_block(const KahlerPackage& pkg, Family f, Bidegree b) {
    const auto& fam = blocks(const_cast<KahlerPackage&>(pkg), f);
    auto it = fam.find(b);
    return it != fam.end() && !it->second.is_zero();
}

}  // namespace

std::string Mutation::describe() const {
    std::string s = std::string(to_string(family)) + " " + block.to_string() + ": ";
    switch (kind) {
    case Kind::Scale: return s + "scale by " + factor.to_string();
    case Kind::FlipEntry: return s + "flip the sign of one entry";
    case Kind::Zero: return s + "zero block";
    }
    return s;
}

KahlerPackage mutate(const KahlerPackage& pkg, const Mutation& m) {
    if (!nonzero_block(pkg, m.family, m.block)) {
        throw Error(ErrorKind::DimensionMismatch, "no nonzero block to mutate: " + m.describe());
    }
    KahlerPackage out = pkg;
    auto& block = blocks(out, m.family).at(m.block);
    switch (m.kind) {
    case Mutation::Kind::Scale: block *= m.factor; break;
    case Mutation::Kind::Zero: block = ExactMatrix(block.rows(), block.cols()); break;
    case Mutation::Kind::FlipEntry: {
        // The densest column is where cancellations between entries happen.
        std::size_t best = 0, best_count = 0;
        for (std::size_t j = 0; j < block.cols(); ++j) {
            std::size_t count = 0;
            for (std::size_t i = 0; i < block.rows(); ++i) count += block(i, j).is_zero() ? 0 : 1;
            if (count > best_count) {
                best = j;
                best_count = count;
            }
        }
        for (std::size_t i = 0; i < block.rows(); ++i) {
            if (!block(i, best).is_zero()) {
                block(i, best) = -block(i, best);
                break;
            }
        }
        break;
    }
    }
    return out;
}

std::vector<Mutation> negative_controls(const KahlerPackage& pkg) {
    using K = Mutation::Kind;
    const GaussianRational two(2), minus(-1), i = GaussianRational::i(), three(3);
    std::vector<Mutation> candidates;
    for (auto b : bidegree_order(pkg.n)) {
        for (Family f : {Family::Dbar, Family::Partial}) {
            candidates.push_back({f, b, K::Scale, two});
            candidates.push_back({f, b, K::FlipEntry, {}});
            candidates.push_back({f, b, K::Scale, i});
            candidates.push_back({f, b, K::Zero, {}});
        }
        candidates.push_back({Family::Lefschetz, b, K::Scale, two});
        candidates.push_back({Family::Lefschetz, b, K::Scale, minus});
        candidates.push_back({Family::Lefschetz, b, K::Zero, {}});
        candidates.push_back({Family::Conj, b, K::Scale, minus});
        candidates.push_back({Family::Conj, b, K::Scale, i});
        candidates.push_back({Family::Conj, b, K::Zero, {}});
        candidates.push_back({Family::Gram, b, K::Scale, three});
    }
    std::vector<Mutation> out;
    for (const auto& m : candidates) {
        if (nonzero_block(pkg, m.family, m.block)) out.push_back(m);
    }
    return out;
}

}  // namespace eigenhodge::verifier
