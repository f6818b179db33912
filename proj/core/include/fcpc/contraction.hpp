#ifndef FCPC_CONTRACTION_HPP
#define FCPC_CONTRACTION_HPP

#include <optional>
#include <vector>

#include "fcpc/graph.hpp"
#include "fcpc/partition.hpp"

namespace fcpc {

/**
 * A block-preserving contraction: an image set U plus a total map phi that
 * keeps every word inside its block, never increases cross-block distances,
 * and fixes U pointwise. phi is held densely for explicit partitions and as
 * a rule (weight lookup or coordinate mask) so weight-based cases at large k
 * never materialize q^k entries.
 */
class Contraction {
public:
    enum class PhiKind { Dense, Weight, Mask };

    static Contraction dense(Space space, std::vector<WordRank> image, std::vector<uint32_t> image_index_of);
    static Contraction weight_rule(Space space);
    static Contraction mask_rule(Space space, std::vector<int> J);

    const Space& space() const { return space_; }
    PhiKind phi_kind() const { return kind_; }
    const std::vector<WordRank>& image() const { return image_; }
    const std::vector<int>& mask_set() const { return mask_J_; }

    /// Index into image() of phi(u).
    uint32_t image_index(WordRank u) const;
    WordRank apply(WordRank u) const { return image_[image_index(u)]; }

private:
    Contraction(Space space, PhiKind kind) : space_(std::move(space)), kind_(kind) {}

    Space space_;
    PhiKind kind_;
    std::vector<WordRank> image_;
    std::vector<uint32_t> dense_map_;        // Dense
    std::vector<uint32_t> index_of_weight_;  // Weight
    std::vector<int> mask_J_;                // Mask, 1-based positions kept
};

struct ContractionCheck {
    bool ok = true;
    /// First violating pair when !ok.
    std::optional<std::pair<WordRank, WordRank>> counterexample;
    /// True when every pair was checked, false for the sampled regime.
    bool exhaustive = true;
    uint64_t pairs_checked = 0;
};

struct ContractionCheckOptions {
    /// Pairwise scan is quadratic; above this space size fall back to
    /// uniform pair sampling.
    uint64_t exhaustive_space_limit = uint64_t(1) << 11;
    uint64_t sample_pairs = 200000;
    uint64_t seed = 0x5eed;
};

/// Checks block preservation, identity on U, and the cross-block distance
/// condition against an explicit partition.
ContractionCheck verify_contraction(const ExplicitPartition& p, const Contraction& c,
                                    const ContractionCheckOptions& options = {});

/// Same checks with block membership read from a grouped-weight rule; the
/// space is never materialized, so large k falls back to sampling.
ContractionCheck verify_contraction(const GroupedWeightPartition& g, const Field& field, const Contraction& c,
                                    const ContractionCheckOptions& options = {});

/// Weight-ladder contraction: U = {1^i 0^(k-i)}, phi(x) = u_wt(x). Valid for
/// every grouped-weight partition of the same k.
Contraction weight_contraction(const Field& field, int k);

/// Coordinate-mask contraction of a coset partition: requires every word
/// supported off J to lie in V; then U = S_J and phi zeroes the coordinates
/// outside J. nullopt when the membership condition fails.
std::optional<Contraction> coset_contraction(const Subspace& v, const std::vector<int>& J);

/// A full-size clique induces the minimum-size contraction: each word maps to
/// its block's clique vertex.
Contraction clique_to_contraction(const ExplicitPartition& p, const Clique& clique);

}  // namespace fcpc

#endif
