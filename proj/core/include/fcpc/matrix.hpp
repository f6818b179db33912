#ifndef FCPC_MATRIX_HPP
#define FCPC_MATRIX_HPP

#include <string>
#include <vector>

#include "fcpc/partition.hpp"

namespace fcpc {

/**
 * Symmetric nonnegative integer matrix of residual distance requirements.
 * The t it was built with travels along so verifiers can reconstruct the
 * 2t+1 threshold; role records how the entries arose.
 */
class DistanceMatrix {
public:
    enum class Role { PDM, PDRM, Generic };

    DistanceMatrix(int n, int t, Role role);

    int n() const { return n_; }
    int t() const { return t_; }
    Role role() const { return role_; }

    int at(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, int value);

    /// max over i<j of the entries (0 for the empty or all-zero matrix).
    int max_entry() const;
    /// sum over i<j of the entries.
    int64_t upper_sum() const;
    bool symmetric_zero_diagonal() const;

    std::string role_name() const;

private:
    int n_;
    int t_;
    Role role_;
    std::vector<int> entries_;
};

/// Minimum Hamming distance between two distinct blocks (0 when i == j).
/// Breadth-first over Hamming spheres seeded from the smaller block.
int block_distance(const ExplicitPartition& p, int32_t i, int32_t j);

/// Distances from one block to every other, capped at depth_cap when
/// depth_cap >= 0 (entries past the cap come back as depth_cap + 1).
std::vector<int> block_distances_from(const ExplicitPartition& p, int32_t source, int depth_cap = -1);

/// Block distance for consecutive grouped-weight partitions: gap between the
/// adjacent interval endpoints.
int block_distance_grouped(const GroupedWeightPartition& g, int r, int s);

/// E x E matrix with entries max(2t+1 - d(P_i, P_j), 0).
DistanceMatrix pdm(const ExplicitPartition& p, int t);

/// M x M requirement matrix over chosen words; the entry vanishes when both
/// words share a block.
DistanceMatrix pdrm(const ExplicitPartition& p, int t, const std::vector<WordRank>& vectors);

/// (k+1) x (k+1) requirement matrix over the canonical weight-ladder
/// representatives of a grouped-weight partition: entry (i, j) is
/// max(2t+1 - |i-j|, 0) when weights i and j fall in different groups.
DistanceMatrix pdrm_grouped(const GroupedWeightPartition& g, int t);

}  // namespace fcpc

#endif
