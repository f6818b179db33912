#include "fcpc/space.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>

namespace fcpc {

namespace {

std::atomic<uint64_t>& cap_storage() {
    static std::atomic<uint64_t> cap = [] {
        if (const char* env = std::getenv("FCPC_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return uint64_t(v);
        }
        return uint64_t(1) << 22;
    }();
    return cap;
}

}  // namespace

uint64_t space_cap() { return cap_storage().load(); }
void set_space_cap(uint64_t cap) { cap_storage().store(cap); }

Space::Space(Field field, int k) : field_(std::move(field)), k_(k), qv_(field_.q()) {
    if (k < 1) throw InvalidArgs("dimension k must be positive");
    pow_.resize(k + 1);
    pow_[0] = 1;
    for (int i = 1; i <= k; ++i) {
        if (pow_[i - 1] > (uint64_t(1) << 62) / qv_)
            throw TooLarge("q^k exceeds the addressable range");
        pow_[i] = pow_[i - 1] * qv_;
    }
    size_ = pow_[k];
}

void Space::require_materializable() const {
    if (size_ > space_cap())
        throw SpaceTooLarge("q^k = " + std::to_string(size_) + " exceeds the explicit-space cap " +
                            std::to_string(space_cap()));
}

std::vector<int> Space::digits_of(WordRank u) const {
    std::vector<int> out(k_);
    for (int i = 0; i < k_; ++i) {
        out[i] = static_cast<int>(u % qv_);
        u /= qv_;
    }
    return out;
}

WordRank Space::rank_of(const std::vector<int>& digits) const {
    if (static_cast<int>(digits.size()) != k_) throw DimensionMismatch("expected " + std::to_string(k_) + " digits");
    WordRank u = 0;
    for (int i = k_ - 1; i >= 0; --i) {
        if (digits[i] < 0 || digits[i] >= static_cast<int>(qv_)) throw BadFormat("digit out of range");
        u = u * qv_ + digits[i];
    }
    return u;
}

int Space::weight(WordRank u) const {
    if (qv_ == 2) return std::popcount(u);
    int w = 0;
    while (u != 0) {
        if (u % qv_ != 0) ++w;
        u /= qv_;
    }
    return w;
}

int Space::distance(WordRank u, WordRank v) const {
    if (qv_ == 2) return std::popcount(u ^ v);
    int d = 0;
    while (u != 0 || v != 0) {
        if (u % qv_ != v % qv_) ++d;
        u /= qv_;
        v /= qv_;
    }
    return d;
}

uint64_t Space::support_mask(WordRank u) const {
    uint64_t mask = 0;
    for (int i = 0; i < k_; ++i) {
        if (u == 0) break;
        if (u % qv_ != 0) mask |= uint64_t(1) << i;
        u /= qv_;
    }
    return mask;
}

std::vector<int> Space::support(WordRank u) const {
    std::vector<int> out;
    for (int i = 0; i < k_; ++i) {
        if (digit(u, i) != 0) out.push_back(i + 1);
    }
    return out;
}

WordRank Space::add(WordRank u, WordRank v) const {
    WordRank out = 0;
    for (int i = k_ - 1; i >= 0; --i) out = out * qv_ + field_.add(digit(u, i), digit(v, i));
    return out;
}

WordRank Space::sub(WordRank u, WordRank v) const {
    WordRank out = 0;
    for (int i = k_ - 1; i >= 0; --i) out = out * qv_ + field_.sub(digit(u, i), digit(v, i));
    return out;
}

bool Space::ball_recurse(WordRank u, int rho, int from_pos, const std::function<bool(WordRank)>& fn) const {
    if (!fn(u)) return false;
    if (rho == 0) return true;
    for (int i = from_pos; i < k_; ++i) {
        int cur = digit(u, i);
        for (int sym = 0; sym < static_cast<int>(qv_); ++sym) {
            if (sym == cur) continue;
            WordRank v = u + (static_cast<int64_t>(sym) - cur) * pow_[i];
            if (!ball_recurse(v, rho - 1, i + 1, fn)) return false;
        }
    }
    return true;
}

void Space::for_each_in_ball(WordRank u, int rho, const std::function<bool(WordRank)>& fn) const {
    ball_recurse(u, rho, 0, fn);
}

std::string Space::word_string(WordRank u) const {
    std::string out;
    for (int i = 0; i < k_; ++i) out += field_.symbol_name(digit(u, i));
    return out;
}

WordRank Space::parse_word(const std::string& text) const {
    std::vector<int> digits;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            digits.push_back(c - '0');
        } else if (c == 'w') {
            size_t j = i + 1;
            int v = 0;
            while (j < text.size() && text[j] >= '0' && text[j] <= '9') v = v * 10 + (text[j++] - '0');
            digits.push_back(v);
            i = j - 1;
        } else {
            throw BadFormat("bad symbol in word string: " + text);
        }
    }
    return rank_of(digits);
}

void require_same_space(const Space& a, const Space& b) {
    if (a != b) throw DimensionMismatch("operands live in different spaces");
}

}  // namespace fcpc
