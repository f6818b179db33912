#include "fcpc/dcode.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace fcpc {

namespace {

int word_distance(const std::vector<int>& a, const std::vector<int>& b) {
    int d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

struct Assignment {
    int index;                                     // row of D
    std::vector<std::pair<int, int>> constraints;  // (earlier slot, required distance)
};

// Slot order: all-zero rows are pinned to the zero word and dropped; the
// rest sorted by decreasing row sum, ties by index.
std::vector<Assignment> plan_assignments(const DistanceMatrix& d) {
    std::vector<int> active;
    std::vector<int64_t> row_sum(d.n(), 0);
    for (int i = 0; i < d.n(); ++i) {
        for (int j = 0; j < d.n(); ++j) row_sum[i] += d.at(i, j);
        if (row_sum[i] > 0) active.push_back(i);
    }
    std::sort(active.begin(), active.end(), [&](int a, int b) {
        if (row_sum[a] != row_sum[b]) return row_sum[a] > row_sum[b];
        return a < b;
    });
    std::vector<Assignment> plan(active.size());
    for (size_t s = 0; s < active.size(); ++s) {
        plan[s].index = active[s];
        for (size_t earlier = 0; earlier < s; ++earlier) {
            const int req = d.at(active[s], active[earlier]);
            if (req > 0) plan[s].constraints.emplace_back(static_cast<int>(earlier), req);
        }
    }
    return plan;
}

// Depth-first existence search at fixed length r over F_2, words as bit
// masks. Returns the first (lexicographically least) solution.
bool search_binary(const std::vector<Assignment>& plan, int r, uint64_t budget, uint64_t& nodes,
                   std::vector<uint64_t>& out, bool& budget_hit) {
    const uint64_t limit = (uint64_t(1) << r) - 1;
    std::vector<uint64_t> words(plan.size(), 0);
    std::vector<uint64_t> cursor(plan.size(), 0);
    size_t level = 1;  // slot 0 pinned to zero
    if (plan.size() <= 1) {
        out = words;
        return true;
    }
    while (true) {
        if (level == plan.size()) {
            out = words;
            return true;
        }
        bool advanced = false;
        for (uint64_t cand = cursor[level]; cand <= limit; ++cand) {
            if (++nodes > budget) {
                budget_hit = true;
                return false;
            }
            bool ok = true;
            for (const auto& [slot, req] : plan[level].constraints) {
                if (std::popcount(words[slot] ^ cand) < req) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                words[level] = cand;
                cursor[level] = cand + 1;
                ++level;
                if (level < plan.size()) cursor[level] = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            if (level == 1) return false;  // slot 0 never moves
            --level;
        }
    }
}

// Same search over a general field, words as digit odometers.
bool search_generic(const std::vector<Assignment>& plan, int r, int q, uint64_t budget, uint64_t& nodes,
                    std::vector<std::vector<int>>& out, bool& budget_hit) {
    std::vector<std::vector<int>> words(plan.size(), std::vector<int>(r, 0));
    if (plan.size() <= 1) {
        out = words;
        return true;
    }
    // cursor[level]: next candidate rank to try at that level
    std::vector<uint64_t> cursor(plan.size(), 0);
    uint64_t total = 1;
    bool overflow = false;
    for (int i = 0; i < r; ++i) {
        if (total > (uint64_t(1) << 62) / q) {
            overflow = true;
            break;
        }
        total *= q;
    }
    if (overflow) total = ~uint64_t(0);

    std::vector<int> cand(r, 0);
    size_t level = 1;
    while (true) {
        if (level == plan.size()) {
            out = words;
            return true;
        }
        bool advanced = false;
        for (uint64_t rank = cursor[level]; rank < total; ++rank) {
            if (++nodes > budget) {
                budget_hit = true;
                return false;
            }
            uint64_t rest = rank;
            for (int i = 0; i < r; ++i) {
                cand[i] = static_cast<int>(rest % q);
                rest /= q;
            }
            bool ok = true;
            for (const auto& [slot, req] : plan[level].constraints) {
                if (word_distance(words[slot], cand) < req) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                words[level] = cand;
                cursor[level] = rank + 1;
                ++level;
                if (level < plan.size()) cursor[level] = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            if (level == 1) return false;
            --level;
        }
    }
}

}  // namespace

DCodeVerification verify_dcode(const DistanceMatrix& d, const DCode& code) {
    if (static_cast<int>(code.words.size()) != d.n()) throw SizeMismatch("code size must match matrix order");
    for (const auto& w : code.words) {
        if (static_cast<int>(w.size()) != code.r) throw SizeMismatch("word length differs from r");
        for (int sym : w) {
            if (sym < 0 || sym >= code.field.q()) throw BadFormat("symbol out of field range");
        }
    }
    for (int i = 0; i < d.n(); ++i) {
        for (int j = i + 1; j < d.n(); ++j) {
            if (word_distance(code.words[i], code.words[j]) < d.at(i, j)) return {false, std::pair{i, j}};
        }
    }
    return {true, std::nullopt};
}

SearchReport min_dcode(const DistanceMatrix& d, const Field& field, const DCodeSearchOptions& options) {
    if (!d.symmetric_zero_diagonal()) throw InvalidArgs("requirement matrix must be symmetric with zero diagonal");
    if (options.r_max < 0 || options.r_max > 32) throw InvalidArgs("r_max must lie in [0, 32]");

    SearchReport report;
    const int floor_r = d.max_entry();
    if (floor_r == 0) {
        report.status = SearchReport::Status::Exact;
        report.r_min = 0;
        report.witness = DCode{field, 0, std::vector<std::vector<int>>(d.n(), std::vector<int>{})};
        report.refutation = "no positive requirement";
        return report;
    }
    if (floor_r > options.r_max) {
        report.status = SearchReport::Status::LowerBoundOnly;
        report.r_min = floor_r;
        report.refutation = "required distance " + std::to_string(floor_r) + " exceeds r_max";
        return report;
    }

    const std::vector<Assignment> plan = plan_assignments(d);
    for (int r = floor_r; r <= options.r_max; ++r) {
        bool budget_hit = false;
        bool found = false;
        std::vector<std::vector<int>> solution;
        if (field.q() == 2) {
            std::vector<uint64_t> bits;
            found = search_binary(plan, r, options.node_budget, report.nodes_expanded, bits, budget_hit);
            if (found) {
                solution.resize(bits.size());
                for (size_t s = 0; s < bits.size(); ++s) {
                    solution[s].resize(r);
                    for (int i = 0; i < r; ++i) solution[s][i] = (bits[s] >> i) & 1;
                }
            }
        } else {
            found = search_generic(plan, r, field.q(), options.node_budget, report.nodes_expanded, solution,
                                   budget_hit);
        }
        if (budget_hit) {
            report.status = SearchReport::Status::BudgetExceeded;
            report.r_min = r;  // lengths below r are refuted
            report.refutation = r == floor_r ? "trivial floor below " + std::to_string(r)
                                             : "search exhausted lengths below " + std::to_string(r);
            return report;
        }
        if (found) {
            DCode witness{field, r, std::vector<std::vector<int>>(d.n(), std::vector<int>(r, 0))};
            for (size_t s = 0; s < plan.size(); ++s) witness.words[plan[s].index] = solution[s];
            report.status = SearchReport::Status::Exact;
            report.r_min = r;
            report.witness = std::move(witness);
            report.refutation = r == floor_r
                                    ? "trivial floor: some pair requires distance " + std::to_string(floor_r)
                                    : "exhaustive search at length " + std::to_string(r - 1);
            return report;
        }
    }
    report.status = SearchReport::Status::LowerBoundOnly;
    report.r_min = options.r_max + 1;
    report.refutation = "search exhausted lengths up to r_max";
    return report;
}

SearchReport n_classical(int m, int d, const Field& field, const DCodeSearchOptions& options) {
    if (m < 1 || d < 0) throw InvalidArgs("need m >= 1 and d >= 0");
    DistanceMatrix matrix(m, 1, DistanceMatrix::Role::Generic);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) matrix.set(i, j, d);
    }
    return min_dcode(matrix, field, options);
}

}  // namespace fcpc
