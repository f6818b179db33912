#ifndef FCPC_GRAPH_HPP
#define FCPC_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcpc/matrix.hpp"
#include "fcpc/partition.hpp"

namespace fcpc {

/// One vertex per block (when full-size), pairwise realizing the block
/// distances. Vertices are kept in increasing rank order.
struct Clique {
    Space space;
    std::vector<WordRank> vertices;

    int size() const { return static_cast<int>(vertices.size()); }
};

/**
 * The E-partite graph on F_q^k induced by a partition: words in distinct
 * blocks are adjacent exactly when their distance equals the block distance.
 * Exact block distances are computed once on construction.
 */
class PartitionGraph {
public:
    explicit PartitionGraph(const ExplicitPartition& p);

    const ExplicitPartition& partition() const { return p_; }
    int block_distance(int32_t i, int32_t j) const { return dist_[static_cast<size_t>(i) * p_.block_count() + j]; }
    bool adjacent(WordRank u, WordRank v) const;

    /// True iff the vertex set hits every block exactly once and is pairwise
    /// adjacent.
    bool is_full_clique(const std::vector<WordRank>& vertices) const;

    /// DOT rendering for figures; refuses spaces above 512 words.
    std::string to_dot() const;

private:
    ExplicitPartition p_;
    std::vector<int> dist_;
};

struct CliqueSearchOptions {
    int max_blocks = 16;
    uint64_t node_budget = 50'000'000;
};

struct CliqueSearchResult {
    enum class Status { Found, NotFound, BudgetExceeded };

    Status status;
    std::optional<Clique> clique;  // canonical least by sorted vertex ranks
    uint64_t nodes_expanded = 0;
};

/**
 * Exhaustive search for a full-size clique. Candidates per block are first
 * filtered to words realizing the block distance toward every other block;
 * the backtracking then fills blocks in increasing candidate-count order.
 * NotFound is an exhaustive certificate; BudgetExceeded is not.
 */
CliqueSearchResult find_full_clique(const ExplicitPartition& p, const CliqueSearchOptions& options = {});

/// Weight-ladder clique of the weight partition: k+1 words a^i 0^(k-i).
Clique weight_clique(const Field& field, int k, int a);

/// Support-partition clique: 2^k words with symbol a on each subset of [k].
Clique support_clique(const Field& field, int k, int a);

/// Clique of a coset partition under the standard-basis coset-count
/// condition; nullopt when the condition fails (which proves nothing).
std::optional<Clique> coset_clique(const Subspace& v);

/// Every radius-rho ball meets at most lambda blocks.
bool is_locally_bounded(const ExplicitPartition& p, int rho, int lambda);

}  // namespace fcpc

#endif
