#ifndef FCPC_FIELD_HPP
#define FCPC_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fcpc/errors.hpp"

namespace fcpc {

/**
 * Arithmetic for GF(q), q = p^m a prime power with 2 <= q <= 256.
 *
 * Elements are integers in [0, q). For extension fields the integer encodes
 * the coefficient vector of the residue polynomial in base p, little-endian:
 * the element sum c_i * p^i stands for the polynomial sum c_i * x^i. The
 * reduction modulus is fixed per (p, m) so that field semantics are identical
 * across runs; GF(4) uses x^2+x+1, hence element 2 (= x) satisfies
 * mul(2,2) == 3 (= x+1).
 *
 * Immutable after construction; all operations are table lookups and safe
 * for unrestricted concurrent use.
 */
class Field {
public:
    /// Builds GF(q). Throws NotAPrimePower / TooLarge for bad q.
    explicit Field(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return m_; }

    /// Little-endian modulus coefficients (constant term first, monic last).
    /// Empty for prime fields.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add_[idx(a, neg_[b])]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }

    /// Multiplicative inverse; throws InvalidArgs for 0.
    int inv(int a) const;

    /// a / b via inverse.
    int div(int a, int b) const { return mul(a, inv(b)); }

    /// Render one element ("0".."9", then "w5" style for larger symbols).
    std::string symbol_name(int a) const;

    bool operator==(const Field& other) const { return q_ == other.q_; }
    bool operator!=(const Field& other) const { return q_ != other.q_; }

private:
    int idx(int a, int b) const { return a * q_ + b; }

    int q_ = 0;
    int p_ = 0;
    int m_ = 1;
    std::vector<int> modulus_;
    std::vector<uint8_t> add_;
    std::vector<uint8_t> mul_;
    std::vector<uint8_t> neg_;
    std::vector<uint8_t> inv_;
    std::vector<uint8_t> exp_;  // exp_[i] = g^i, m > 1 only
    std::vector<int> log_;      // log_[exp_[i]] = i, m > 1 only
};

}  // namespace fcpc

#endif
