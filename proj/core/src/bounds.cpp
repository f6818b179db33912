#include "fcpc/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace fcpc {

namespace {

int64_t ceil_div(int64_t num, int64_t den) { return (num + den - 1) / den; }

int64_t binomial(int64_t n, int64_t r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    int64_t out = 1;
    for (int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

}  // namespace

Rational::Rational(int64_t n, int64_t d) {
    if (d == 0) throw InvalidArgs("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const int64_t g = std::gcd(n < 0 ? -n : n, d);
    num = g == 0 ? 0 : n / g;
    den = g == 0 ? 1 : d / g;
}

std::string Rational::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

Rational plotkin_lower_exact(const DistanceMatrix& d, const Field& field) {
    const int64_t m = d.n();
    if (m < 2) return Rational(0, 1);
    const int64_t q = field.q();
    const int64_t a = m % q;
    const int64_t den = m * m * (q - 1) - a * (q - a);
    return Rational(2 * q * d.upper_sum(), den);
}

int64_t plotkin_lower(const DistanceMatrix& d, const Field& field) {
    const Rational exact = plotkin_lower_exact(d, field);
    if (exact.num <= 0) return 0;
    return ceil_div(exact.num, exact.den);
}

int64_t weight_requirement_total(int64_t k, int64_t t) {
    if (k < 1 || t < 1) throw InvalidArgs("need k, t >= 1");
    if (k <= 2 * t) return k * (k + 1) * (6 * t + 1 - k) / 6;
    return t * (2 * t + 1) * (3 * k - 2 * t + 1) / 3;
}

BoundReport weight_bounds(int k, int t, const Field& field, const std::optional<DCodeSearchOptions>& search) {
    if (k < 1 || t < 1) throw InvalidArgs("need k, t >= 1");
    BoundReport report;
    const int64_t q = field.q();
    const int64_t m = k + 1;
    const int64_t a = m % q;
    report.lower_exact = Rational(2 * q * weight_requirement_total(k, t), m * m * (q - 1) - a * (q - a));
    report.lower = ceil_div(report.lower_exact->num, report.lower_exact->den);
    report.lower_provenance = "plotkin average over the weight-ladder requirements";
    if (search) {
        const SearchReport upper = n_classical(std::min(2 * t + 1, k + 1), 2 * t, field, *search);
        if (upper.status == SearchReport::Status::Exact) {
            report.upper = upper.r_min;
            report.upper_provenance = "N(min(2t+1,k+1), 2t) by exact search";
        }
    }
    return report;
}

BoundReport support_bounds(int k, int t, const Field& field, const std::optional<DCodeSearchOptions>& search) {
    if (k < 1 || t < 1) throw InvalidArgs("need k, t >= 1");
    if (k > 30) throw TooLarge("support bounds need k <= 30");
    BoundReport report;
    const int64_t q = field.q();
    const int64_t m = int64_t(1) << k;  // 2^k representatives
    const int64_t a = m % q;
    int64_t requirement_sum = 0;
    for (int64_t s = 1; s <= std::min<int64_t>(k, 2 * t); ++s)
        requirement_sum += (2 * t + 1 - s) * binomial(k, s);
    const __int128 num = static_cast<__int128>(m) * q * requirement_sum;
    const __int128 den = static_cast<__int128>(m) * m * (q - 1) - a * (q - a);
    if (num > INT64_MAX || den > INT64_MAX) throw TooLarge("bound arithmetic exceeds 64 bits");
    report.lower_exact = Rational(static_cast<int64_t>(num), static_cast<int64_t>(den));
    report.lower = ceil_div(report.lower_exact->num, report.lower_exact->den);
    report.lower_provenance = "plotkin average over the support-clique requirements";
    if (search) {
        const SearchReport upper = n_classical(static_cast<int>(m), 2 * t, field, *search);
        if (upper.status == SearchReport::Status::Exact) {
            report.upper = upper.r_min;
            report.upper_provenance = "N(2^k, 2t) by exact search";
        }
    }
    return report;
}

BoundReport join_bounds(const std::vector<int>& individual_r, int k, int t, std::optional<int> n_full) {
    if (individual_r.empty()) throw InvalidArgs("need at least one redundancy value");
    (void)t;
    BoundReport report;
    report.lower = *std::max_element(individual_r.begin(), individual_r.end());
    report.lower_provenance = "max of the per-partition redundancies";
    const int64_t sum = std::accumulate(individual_r.begin(), individual_r.end(), int64_t(0));
    report.upper = sum;
    report.upper_provenance = "sum of the per-partition redundancies";
    if (n_full) {
        const int64_t via_full = *n_full - k;
        if (via_full < sum) {
            report.upper = via_full;
            report.upper_provenance = "full-recovery code length minus k (externally supplied)";
        }
    }
    return report;
}

PartitionGains partition_gains(const std::vector<int>& individual_r, int r, int k) {
    if (individual_r.empty()) throw InvalidArgs("need at least one redundancy value");
    const int64_t sum = std::accumulate(individual_r.begin(), individual_r.end(), int64_t(0));
    const int64_t saved = sum - r;
    return {Rational(saved, static_cast<int64_t>(individual_r.size())), Rational(saved, int64_t(k) + r)};
}

int trivial_lower(int block_count, int t) { return block_count >= 2 ? 2 * t : 0; }

}  // namespace fcpc
