#ifndef FCPC_DCODE_HPP
#define FCPC_DCODE_HPP

#include <optional>
#include <string>
#include <vector>

#include "fcpc/matrix.hpp"

namespace fcpc {

/// A candidate irregular-distance code: M words of length r over the field
/// (repeats allowed wherever the matrix permits).
struct DCode {
    Field field;
    int r = 0;
    std::vector<std::vector<int>> words;  // digit vectors, length r each
};

struct DCodeVerification {
    bool ok = true;
    std::optional<std::pair<int, int>> violation;  // first failing index pair
};

/// Checks d(words[i], words[j]) >= D[i][j] for all pairs.
DCodeVerification verify_dcode(const DistanceMatrix& d, const DCode& code);

struct DCodeSearchOptions {
    int r_max = 32;
    uint64_t node_budget = 100'000'000;
};

/**
 * Result of an exact N(D) computation. Exact means the witness is valid at
 * r_min and length r_min - 1 is refuted, either by the trivial floor
 * (some required distance exceeds r_min - 1) or by exhausting the search
 * space at r_min - 1 within budget.
 */
struct SearchReport {
    enum class Status { Exact, LowerBoundOnly, BudgetExceeded };

    Status status = Status::Exact;
    int r_min = 0;  // exact value, or the best proven lower bound otherwise
    std::optional<DCode> witness;
    uint64_t nodes_expanded = 0;
    std::string refutation;  // how r_min - 1 was ruled out
};

/**
 * Smallest r admitting a D-code, by iterative deepening from the forced
 * floor max D[i][j]. At each length a depth-first search assigns words in
 * decreasing row-sum order, fixes the first assigned word to zero
 * (componentwise translation keeps Hamming distances), gives all-zero rows
 * the zero word outright, and checks candidates only against predecessors
 * with a positive requirement, which keeps banded matrices cheap.
 */
SearchReport min_dcode(const DistanceMatrix& d, const Field& field, const DCodeSearchOptions& options = {});

/// Classical N(M, d): the constant-requirement special case.
SearchReport n_classical(int m, int d, const Field& field, const DCodeSearchOptions& options = {});

}  // namespace fcpc

#endif
