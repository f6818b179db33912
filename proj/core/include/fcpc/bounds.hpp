#ifndef FCPC_BOUNDS_HPP
#define FCPC_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fcpc/dcode.hpp"
#include "fcpc/matrix.hpp"

namespace fcpc {

/// Reduced fraction with positive denominator; all gain arithmetic is exact.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n, int64_t d);

    bool operator==(const Rational& other) const { return num == other.num && den == other.den; }
    std::string str() const;
};

/// Redundancy interval with a note on where each side came from.
struct BoundReport {
    int64_t lower = 0;
    std::optional<int64_t> upper;
    std::string lower_provenance;
    std::string upper_provenance;
    /// Exact pre-ceiling value of the lower bound, when it came from the
    /// Plotkin-type average.
    std::optional<Rational> lower_exact;
};

/// Plotkin-type lower bound on N(D) over F_q:
/// ceil( 2q * sum_{i<j} D_ij / (M^2 (q-1) - a(q-a)) ), a = M mod q.
int64_t plotkin_lower(const DistanceMatrix& d, const Field& field);

/// The same bound as an exact fraction, before the ceiling.
Rational plotkin_lower_exact(const DistanceMatrix& d, const Field& field);

/// Closed-form requirement total of the weight-ladder matrix:
/// sum over gaps s of (k+1-s)(2t+1-s), in its two algebraic branches.
int64_t weight_requirement_total(int64_t k, int64_t t);

/**
 * Redundancy bounds for the weight partition of F_q^k. The lower side is the
 * closed form of the Plotkin bound on the ladder matrix; the upper side is
 * N(min(2t+1, k+1), 2t) when a search is requested.
 */
BoundReport weight_bounds(int k, int t, const Field& field,
                          const std::optional<DCodeSearchOptions>& search = std::nullopt);

/// Redundancy bounds for the support partition of F_q^k (k <= 30).
BoundReport support_bounds(int k, int t, const Field& field,
                           const std::optional<DCodeSearchOptions>& search = std::nullopt);

/// Bounds for a join from per-partition redundancies: lower is their max,
/// upper the smaller of their sum and n_full - k when the full-recovery code
/// length n_full is supplied externally.
BoundReport join_bounds(const std::vector<int>& individual_r, int k, int t,
                        std::optional<int> n_full = std::nullopt);

struct PartitionGains {
    Rational redundancy_gain;  // (sum r_i - r) / K
    Rational rate_gain;        // (sum r_i - r) / (k + r)
};

PartitionGains partition_gains(const std::vector<int>& individual_r, int r, int k);

/// 2t whenever the partition has at least two blocks, 0 otherwise.
int trivial_lower(int block_count, int t);

}  // namespace fcpc

#endif
