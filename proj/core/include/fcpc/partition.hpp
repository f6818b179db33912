#ifndef FCPC_PARTITION_HPP
#define FCPC_PARTITION_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fcpc/space.hpp"
#include "fcpc/subspace.hpp"

namespace fcpc {

/**
 * Dense partition of F_q^k: every rank carries a block id in [0, E). Block
 * ids are canonical first-occurrence order of ranks, so structurally equal
 * partitions compare equal regardless of how their labels arrived.
 */
class ExplicitPartition {
public:
    ExplicitPartition(Space space, std::vector<int32_t> block_of);

    const Space& space() const { return space_; }
    int block_count() const { return block_count_; }
    int32_t block_of(WordRank u) const { return block_of_[u]; }
    const std::vector<int32_t>& labels() const { return block_of_; }
    const std::vector<WordRank>& members(int32_t block) const;
    uint64_t block_size(int32_t block) const { return members(block).size(); }

    bool operator==(const ExplicitPartition& other) const {
        return space_ == other.space_ && block_of_ == other.block_of_;
    }

private:
    Space space_;
    std::vector<int32_t> block_of_;
    int32_t block_count_ = 0;
    std::vector<std::vector<WordRank>> members_;
};

/**
 * Compact partition of F_q^k whose blocks are unions of Hamming-weight
 * classes, described by a partition of the weight range {0..k}. The only
 * family the toolkit handles without materializing the space.
 */
class GroupedWeightPartition {
public:
    GroupedWeightPartition(int k, std::vector<std::vector<int>> groups);

    int k() const { return k_; }
    int group_count() const { return static_cast<int>(groups_.size()); }
    const std::vector<std::vector<int>>& groups() const { return groups_; }
    int group_of_weight(int w) const;
    /// True iff every group is an integer interval.
    bool consecutive() const { return consecutive_; }
    /// [min, max] of an interval group; NotConsecutive if the flag is false.
    std::pair<int, int> interval(int group) const;

    bool operator==(const GroupedWeightPartition& other) const {
        return k_ == other.k_ && groups_ == other.groups_;
    }

private:
    int k_;
    std::vector<std::vector<int>> groups_;  // sorted, canonical order by least weight
    std::vector<int> group_of_;
    bool consecutive_;
};

/// Preimage partition of a total labeling of the space.
ExplicitPartition from_function(const Space& space, const std::function<int64_t(WordRank)>& f);

/// Coarsest common refinement: blocks are the nonempty pairwise
/// intersections of a block of p and a block of q.
ExplicitPartition join(const ExplicitPartition& p, const ExplicitPartition& q);

/// True iff every block of q is contained in some block of p.
bool is_refinement(const ExplicitPartition& q, const ExplicitPartition& p);

/// Cosets x + V; the zero word's block is V itself.
ExplicitPartition coset_partition(const Subspace& v);

GroupedWeightPartition weight_partition(int k);
/// Weight intervals of width T (the last may be shorter); T > k collapses
/// everything into one group.
GroupedWeightPartition hwdf_partition(int k, int T);
GroupedWeightPartition grouped(int k, const std::vector<std::vector<int>>& groups);
GroupedWeightPartition join_grouped(const GroupedWeightPartition& a, const GroupedWeightPartition& b);

/// Blocks collect the words sharing a support set; 2^k blocks.
ExplicitPartition support_partition(const Space& space);
/// Blocks fix the coordinates in J (1-based); q^|J| blocks.
ExplicitPartition coordinate_partition(const Space& space, const std::vector<int>& J);

ExplicitPartition materialize(const GroupedWeightPartition& g, const Field& field);

/// Exact H!/(H-E)! as a decimal string (the count of functions with a given
/// codomain inducing one fixed E-block partition).
std::string function_class_size(uint64_t H, uint64_t E);

/**
 * A partition as described by an artifact file: either carried explicitly or
 * as a rule (grouped-weight, coset, coordinate, support) that materializes on
 * demand.
 */
class PartitionSpec {
public:
    enum class Kind { Explicit, GroupedWeight, Coset, Coordinate, Support };

    static PartitionSpec explicit_partition(ExplicitPartition p);
    static PartitionSpec grouped_weight(const Field& field, GroupedWeightPartition g);
    static PartitionSpec coset(Subspace v);
    static PartitionSpec coordinate(Space space, std::vector<int> J);
    static PartitionSpec support(Space space);

    Kind kind() const { return kind_; }
    const Space& space() const { return space_; }

    const ExplicitPartition& explicit_form() const;
    const GroupedWeightPartition& grouped_form() const;
    const Subspace& coset_subspace() const;
    const std::vector<int>& coordinate_set() const;

    /// Dense form (cached); throws SpaceTooLarge past the cap.
    const ExplicitPartition& materialized() const;

    std::string kind_name() const;

private:
    explicit PartitionSpec(Kind kind, Space space) : kind_(kind), space_(std::move(space)) {}

    Kind kind_;
    Space space_;
    std::optional<ExplicitPartition> explicit_;
    std::optional<GroupedWeightPartition> grouped_;
    std::optional<Subspace> subspace_;
    std::vector<int> coord_J_;
    mutable std::optional<ExplicitPartition> cache_;
};

}  // namespace fcpc

#endif
