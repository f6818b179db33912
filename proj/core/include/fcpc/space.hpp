#ifndef FCPC_SPACE_HPP
#define FCPC_SPACE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fcpc/field.hpp"

namespace fcpc {

using WordRank = uint64_t;

/// Process-wide cap on explicitly materialized spaces (default 2^22,
/// overridable via the FCPC_CAP environment variable or set_space_cap).
uint64_t space_cap();
void set_space_cap(uint64_t cap);

/**
 * The ambient space F_q^k. Words are addressed by their rank, the canonical
 * little-endian base-q integer: rank = sum digits[i] * q^i, so digit 0 is the
 * leftmost symbol in concatenated notation like "011".
 */
class Space {
public:
    Space(Field field, int k);

    const Field& field() const { return field_; }
    int q() const { return field_.q(); }
    int k() const { return k_; }

    /// q^k; always representable (construction enforces q^k < 2^63).
    uint64_t size() const { return size_; }

    /// Throws SpaceTooLarge unless q^k fits the explicit-materialization cap.
    void require_materializable() const;

    uint64_t pow_q(int i) const { return pow_[i]; }

    int digit(WordRank u, int i) const { return static_cast<int>((u / pow_[i]) % qv_); }
    std::vector<int> digits_of(WordRank u) const;
    WordRank rank_of(const std::vector<int>& digits) const;

    int weight(WordRank u) const;
    int distance(WordRank u, WordRank v) const;

    /// Support as a bit mask over positions 0..k-1 (requires k <= 63).
    uint64_t support_mask(WordRank u) const;
    /// Support as 1-based indices, matching the [k] index convention.
    std::vector<int> support(WordRank u) const;

    WordRank add(WordRank u, WordRank v) const;
    WordRank sub(WordRank u, WordRank v) const;

    /// All words within Hamming distance rho of u, including u itself.
    /// Stops early if fn returns false.
    void for_each_in_ball(WordRank u, int rho, const std::function<bool(WordRank)>& fn) const;

    /// Concatenated symbol string, e.g. 0110.
    std::string word_string(WordRank u) const;
    /// Parses a concatenated symbol string; throws BadFormat on bad input.
    WordRank parse_word(const std::string& text) const;

    bool operator==(const Space& other) const { return qv_ == other.qv_ && k_ == other.k_; }
    bool operator!=(const Space& other) const { return !(*this == other); }

private:
    bool ball_recurse(WordRank u, int rho, int from_pos, const std::function<bool(WordRank)>& fn) const;

    Field field_;
    int k_;
    uint64_t qv_;
    uint64_t size_;
    std::vector<uint64_t> pow_;
};

/// Requires matching spaces; DimensionMismatch otherwise.
void require_same_space(const Space& a, const Space& b);

}  // namespace fcpc

#endif
