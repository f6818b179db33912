#include "fcpc/field.hpp"

#include <array>
#include <map>
#include <numeric>

namespace fcpc {

namespace {

// Fixed reduction polynomials, little-endian coefficients, monic.
// Entries below follow the Conway convention except where a simpler
// classical choice is pinned (GF(9): x^2+1, GF(25): x^2+x+2).
const std::map<int, std::vector<int>>& fixed_moduli() {
    static const std::map<int, std::vector<int>> table = {
        {4, {1, 1, 1}},
        {8, {1, 1, 0, 1}},
        {9, {1, 0, 1}},
        {16, {1, 1, 0, 0, 1}},
        {25, {2, 1, 1}},
        {27, {1, 2, 0, 1}},
        {32, {1, 0, 1, 0, 0, 1}},
        {49, {3, 6, 1}},
        {64, {1, 1, 0, 1, 1, 0, 1}},
        {81, {2, 0, 0, 2, 1}},
        {121, {2, 7, 1}},
        {125, {3, 3, 0, 1}},
        {128, {1, 1, 0, 0, 0, 0, 0, 1}},
        {169, {2, 12, 1}},
        {243, {1, 2, 0, 0, 0, 1}},
        {256, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    };
    return table;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// q = p^m with p prime, or p = 0 if q is not a prime power.
std::pair<int, int> prime_power_split(int q) {
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p != 0) continue;
        int m = 0, rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++m;
        }
        return rest == 1 ? std::pair{p, m} : std::pair{0, 0};
    }
    return {0, 0};
}

std::vector<int> to_poly(int value, int p, int m) {
    std::vector<int> coeffs(m, 0);
    for (int i = 0; i < m && value > 0; ++i) {
        coeffs[i] = value % p;
        value /= p;
    }
    return coeffs;
}

int from_poly(const std::vector<int>& coeffs, int p) {
    int value = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        value = value * p + coeffs[i];
    return value;
}

// Product of two residue polynomials, reduced by the monic modulus.
int poly_mul_mod(int a, int b, int p, int m, const std::vector<int>& mod) {
    std::vector<int> pa = to_poly(a, p, m), pb = to_poly(b, p, m);
    std::vector<int> prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i) {
        if (pa[i] == 0) continue;
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
    }
    for (int d = 2 * m - 2; d >= m; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < m; ++i)
            prod[d - m + i] = ((prod[d - m + i] - c * mod[i]) % p + p * p) % p;
    }
    prod.resize(m);
    return from_poly(prod, p);
}

}  // namespace

Field::Field(int q) : q_(q) {
    if (q > 256) throw TooLarge("field size " + std::to_string(q) + " exceeds 256");
    if (q < 2) throw NotAPrimePower("field size must be at least 2");
    auto [p, m] = prime_power_split(q);
    if (p == 0) throw NotAPrimePower(std::to_string(q) + " is not a prime power");
    p_ = p;
    m_ = m;

    add_.resize(static_cast<size_t>(q) * q);
    mul_.resize(static_cast<size_t>(q) * q);
    neg_.resize(q);
    inv_.assign(q, 0);

    if (m_ == 1) {
        for (int a = 0; a < q; ++a) {
            neg_[a] = static_cast<uint8_t>((q - a) % q);
            for (int b = 0; b < q; ++b) {
                add_[idx(a, b)] = static_cast<uint8_t>((a + b) % q);
                mul_[idx(a, b)] = static_cast<uint8_t>((a * b) % q);
            }
        }
    } else {
        modulus_ = fixed_moduli().at(q);
        for (int a = 0; a < q; ++a) {
            std::vector<int> pa = to_poly(a, p_, m_);
            for (int& c : pa) c = (p_ - c) % p_;
            neg_[a] = static_cast<uint8_t>(from_poly(pa, p_));
            for (int b = 0; b < q; ++b) {
                std::vector<int> pb = to_poly(b, p_, m_), sum(m_);
                std::vector<int> pav = to_poly(a, p_, m_);
                for (int i = 0; i < m_; ++i) sum[i] = (pav[i] + pb[i]) % p_;
                add_[idx(a, b)] = static_cast<uint8_t>(from_poly(sum, p_));
                mul_[idx(a, b)] = static_cast<uint8_t>(poly_mul_mod(a, b, p_, m_, modulus_));
            }
        }
        // exp/log tables from a generator of the (cyclic) unit group; finding
        // one also certifies the modulus is irreducible.
        int generator = 0;
        for (int g = 2; g < q && generator == 0; ++g) {
            int x = g, order = 1;
            while (x != 1 && order <= q) {
                x = mul_[idx(x, g)];
                ++order;
            }
            if (x == 1 && order == q - 1) generator = g;
        }
        if (generator == 0) throw Error("no multiplicative generator for GF(" + std::to_string(q) + ")");
        exp_.resize(q - 1);
        log_.assign(q, -1);
        int x = 1;
        for (int i = 0; i < q - 1; ++i) {
            exp_[i] = static_cast<uint8_t>(x);
            log_[x] = i;
            x = mul_[idx(x, generator)];
        }
    }

    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b) {
            if (mul_[idx(a, b)] == 1) {
                inv_[a] = static_cast<uint8_t>(b);
                break;
            }
        }
    }
}

int Field::inv(int a) const {
    if (a == 0) throw InvalidArgs("0 has no multiplicative inverse");
    return inv_[a];
}

std::string Field::symbol_name(int a) const {
    if (a < 10) return std::string(1, static_cast<char>('0' + a));
    return "w" + std::to_string(a);
}

}  // namespace fcpc
