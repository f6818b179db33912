#include "fcpc/contraction.hpp"

#include <algorithm>
#include <random>

namespace fcpc {

Contraction Contraction::dense(Space space, std::vector<WordRank> image, std::vector<uint32_t> image_index_of) {
    space.require_materializable();
    if (image_index_of.size() != space.size()) throw DimensionMismatch("phi must be total");
    for (uint32_t idx : image_index_of) {
        if (idx >= image.size()) throw InvalidArgs("phi maps outside U");
    }
    Contraction c(std::move(space), PhiKind::Dense);
    c.image_ = std::move(image);
    c.dense_map_ = std::move(image_index_of);
    return c;
}

Contraction Contraction::weight_rule(Space space) {
    Contraction c(space, PhiKind::Weight);
    WordRank u = 0;
    c.image_.push_back(u);
    for (int i = 0; i < space.k(); ++i) {
        u += space.pow_q(i);  // symbol 1 on one more position
        c.image_.push_back(u);
    }
    c.index_of_weight_.resize(space.k() + 1);
    for (int w = 0; w <= space.k(); ++w) c.index_of_weight_[w] = w;
    return c;
}

Contraction Contraction::mask_rule(Space space, std::vector<int> J) {
    for (int j : J) {
        if (j < 1 || j > space.k()) throw InvalidArgs("mask index out of [k]");
    }
    std::sort(J.begin(), J.end());
    Contraction c(space, PhiKind::Mask);
    uint64_t count = 1;
    for (size_t i = 0; i < J.size(); ++i) {
        count *= space.q();
        if (count > space_cap()) throw SpaceTooLarge("image set too large to enumerate");
    }
    // Image = all words supported inside J, in increasing rank order.
    std::vector<WordRank> image;
    image.reserve(count);
    for (uint64_t n = 0; n < count; ++n) {
        uint64_t rest = n;
        WordRank u = 0;
        for (int j : J) {
            u += (rest % space.q()) * space.pow_q(j - 1);
            rest /= space.q();
        }
        image.push_back(u);
    }
    std::sort(image.begin(), image.end());
    c.image_ = std::move(image);
    c.mask_J_ = std::move(J);
    return c;
}

uint32_t Contraction::image_index(WordRank u) const {
    switch (kind_) {
        case PhiKind::Dense:
            return dense_map_[u];
        case PhiKind::Weight:
            return index_of_weight_[space_.weight(u)];
        case PhiKind::Mask: {
            WordRank masked = 0;
            for (int j : mask_J_) masked += static_cast<WordRank>(space_.digit(u, j - 1)) * space_.pow_q(j - 1);
            const auto it = std::lower_bound(image_.begin(), image_.end(), masked);
            return static_cast<uint32_t>(it - image_.begin());
        }
    }
    throw Error("unreachable");
}

namespace {

template <typename BlockOf>
ContractionCheck verify_impl(const Space& space, const BlockOf& block_of, const Contraction& c,
                             const ContractionCheckOptions& options) {
    ContractionCheck result;

    // phi restricted to U must be the identity.
    for (WordRank u : c.image()) {
        if (c.apply(u) != u) {
            result.ok = false;
            result.counterexample = {u, u};
            return result;
        }
    }

    const bool exhaustive = space.size() <= options.exhaustive_space_limit;
    result.exhaustive = exhaustive;

    auto check_pair = [&](WordRank u, WordRank v) {
        if (block_of(u) == block_of(v)) return true;
        return space.distance(c.apply(u), c.apply(v)) <= space.distance(u, v);
    };
    auto check_membership = [&](WordRank u) { return block_of(c.apply(u)) == block_of(u); };

    if (exhaustive) {
        for (WordRank u = 0; u < space.size(); ++u) {
            if (!check_membership(u)) {
                result.ok = false;
                result.counterexample = {u, u};
                return result;
            }
        }
        for (WordRank u = 0; u < space.size(); ++u) {
            for (WordRank v = u + 1; v < space.size(); ++v) {
                ++result.pairs_checked;
                if (!check_pair(u, v)) {
                    result.ok = false;
                    result.counterexample = {u, v};
                    return result;
                }
            }
        }
    } else {
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<uint64_t> pick(0, space.size() - 1);
        for (uint64_t n = 0; n < options.sample_pairs; ++n) {
            const WordRank u = pick(rng), v = pick(rng);
            if (!check_membership(u)) {
                result.ok = false;
                result.counterexample = {u, u};
                return result;
            }
            if (u == v) continue;
            ++result.pairs_checked;
            if (!check_pair(u, v)) {
                result.ok = false;
                result.counterexample = {u, v};
                return result;
            }
        }
    }
    return result;
}

}  // namespace

ContractionCheck verify_contraction(const ExplicitPartition& p, const Contraction& c,
                                    const ContractionCheckOptions& options) {
    require_same_space(p.space(), c.space());
    return verify_impl(p.space(), [&](WordRank u) { return p.block_of(u); }, c, options);
}

ContractionCheck verify_contraction(const GroupedWeightPartition& g, const Field& field, const Contraction& c,
                                    const ContractionCheckOptions& options) {
    Space space(field, g.k());
    require_same_space(space, c.space());
    return verify_impl(space, [&](WordRank u) { return g.group_of_weight(space.weight(u)); }, c, options);
}

Contraction weight_contraction(const Field& field, int k) { return Contraction::weight_rule(Space(field, k)); }

std::optional<Contraction> coset_contraction(const Subspace& v, const std::vector<int>& J) {
    const Space& space = v.space();
    for (int j : J) {
        if (j < 1 || j > space.k()) throw InvalidArgs("mask index out of [k]");
    }
    // Words supported off J form a subspace; checking the scaled unit
    // generators settles containment in V.
    std::vector<bool> in_J(space.k() + 1, false);
    for (int j : J) in_J[j] = true;
    for (int pos = 1; pos <= space.k(); ++pos) {
        if (in_J[pos]) continue;
        for (int sym = 1; sym < space.q(); ++sym) {
            if (!v.contains(static_cast<WordRank>(sym) * space.pow_q(pos - 1))) return std::nullopt;
        }
    }
    return Contraction::mask_rule(space, J);
}

Contraction clique_to_contraction(const ExplicitPartition& p, const Clique& clique) {
    require_same_space(p.space(), clique.space);
    if (clique.size() != p.block_count()) throw NotFullSize("clique does not cover every block");
    std::vector<int32_t> vertex_of_block(p.block_count(), -1);
    for (int i = 0; i < clique.size(); ++i) {
        const int32_t b = p.block_of(clique.vertices[i]);
        if (vertex_of_block[b] != -1) throw NotFullSize("two clique vertices share a block");
        vertex_of_block[b] = i;
    }
    std::vector<uint32_t> map(p.space().size());
    for (WordRank u = 0; u < p.space().size(); ++u) map[u] = static_cast<uint32_t>(vertex_of_block[p.block_of(u)]);
    return Contraction::dense(p.space(), clique.vertices, std::move(map));
}

}  // namespace fcpc
