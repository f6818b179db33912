#ifndef FCPC_SUBSPACE_HPP
#define FCPC_SUBSPACE_HPP

#include <vector>

#include "fcpc/space.hpp"

namespace fcpc {

/**
 * A subspace of F_q^k held as a reduced-row-echelon basis. Rows are digit
 * vectors; pivots are 1 and are the only nonzero entries of their column.
 */
class Subspace {
public:
    /// Spans the given words and reduces them; dependent generators are fine.
    Subspace(Space space, const std::vector<std::vector<int>>& generators);

    static Subspace zero(const Space& space);
    static Subspace whole(const Space& space);

    const Space& space() const { return space_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<int>>& basis() const { return basis_; }

    bool contains(WordRank u) const;

    /// All q^dim member ranks, in increasing rank order. Guarded by the cap.
    std::vector<WordRank> enumerate() const;

    /// Basis of { y : y . b = 0 for every basis row b }; over a finite field
    /// the double complement returns the original space, so the result serves
    /// as a parity-check description of this subspace.
    Subspace orthogonal_complement() const;

    bool operator==(const Subspace& other) const;

private:
    Space space_;
    std::vector<std::vector<int>> basis_;  // RREF rows
    std::vector<int> pivot_cols_;
};

/// Null space of an l x k matrix over the field; dim = k - rank.
Subspace kernel_of_linear(const Space& space, const std::vector<std::vector<int>>& matrix);

/// Intersection of subspaces of a shared space.
Subspace kernel_intersection(const std::vector<Subspace>& subspaces);

}  // namespace fcpc

#endif
