#include "fcpc/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace fcpc {

DistanceMatrix::DistanceMatrix(int n, int t, Role role) : n_(n), t_(t), role_(role) {
    if (n < 0) throw InvalidArgs("matrix order must be nonnegative");
    entries_.assign(static_cast<size_t>(n) * n, 0);
}

void DistanceMatrix::set(int i, int j, int value) {
    if (value < 0) throw InvalidArgs("requirement entries are nonnegative");
    entries_[static_cast<size_t>(i) * n_ + j] = value;
    entries_[static_cast<size_t>(j) * n_ + i] = value;
}

int DistanceMatrix::max_entry() const {
    int best = 0;
    for (int v : entries_) best = std::max(best, v);
    return best;
}

int64_t DistanceMatrix::upper_sum() const {
    int64_t sum = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) sum += at(i, j);
    }
    return sum;
}

bool DistanceMatrix::symmetric_zero_diagonal() const {
    for (int i = 0; i < n_; ++i) {
        if (at(i, i) != 0) return false;
        for (int j = i + 1; j < n_; ++j) {
            if (at(i, j) != at(j, i)) return false;
        }
    }
    return true;
}

std::string DistanceMatrix::role_name() const {
    switch (role_) {
        case Role::PDM: return "pdm";
        case Role::PDRM: return "pdrm";
        case Role::Generic: return "generic";
    }
    return "?";
}

std::vector<int> block_distances_from(const ExplicitPartition& p, int32_t source, int depth_cap) {
    const Space& space = p.space();
    const int unreachable = depth_cap >= 0 ? depth_cap + 1 : space.k() + 1;
    std::vector<int> dist_to_block(p.block_count(), unreachable);
    dist_to_block[source] = 0;

    std::vector<int8_t> visited(space.size(), 0);
    std::vector<WordRank> frontier = p.members(source);
    for (WordRank u : frontier) visited[u] = 1;

    int remaining = p.block_count() - 1;
    int depth = 0;
    while (!frontier.empty() && remaining > 0 && (depth_cap < 0 || depth < depth_cap)) {
        ++depth;
        std::vector<WordRank> next;
        next.reserve(frontier.size());
        for (WordRank u : frontier) {
            for (int pos = 0; pos < space.k(); ++pos) {
                const int cur = space.digit(u, pos);
                for (int sym = 0; sym < space.q(); ++sym) {
                    if (sym == cur) continue;
                    const WordRank v = u + (static_cast<int64_t>(sym) - cur) * space.pow_q(pos);
                    if (visited[v]) continue;
                    visited[v] = 1;
                    next.push_back(v);
                    const int32_t b = p.block_of(v);
                    if (dist_to_block[b] > depth) {
                        dist_to_block[b] = depth;
                        --remaining;
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return dist_to_block;
}

int block_distance(const ExplicitPartition& p, int32_t i, int32_t j) {
    if (i < 0 || i >= p.block_count() || j < 0 || j >= p.block_count()) throw BadBlockId("no such block");
    if (i == j) return 0;
    const int32_t source = p.block_size(i) <= p.block_size(j) ? i : j;
    const int32_t target = source == i ? j : i;

    // Expanding-sphere scan from the smaller block with exit on first hit.
    const Space& space = p.space();
    std::vector<int8_t> visited(space.size(), 0);
    std::vector<WordRank> frontier = p.members(source);
    for (WordRank u : frontier) visited[u] = 1;
    int depth = 0;
    while (!frontier.empty()) {
        ++depth;
        std::vector<WordRank> next;
        for (WordRank u : frontier) {
            for (int pos = 0; pos < space.k(); ++pos) {
                const int cur = space.digit(u, pos);
                for (int sym = 0; sym < space.q(); ++sym) {
                    if (sym == cur) continue;
                    const WordRank v = u + (static_cast<int64_t>(sym) - cur) * space.pow_q(pos);
                    if (visited[v]) continue;
                    if (p.block_of(v) == target) return depth;
                    visited[v] = 1;
                    next.push_back(v);
                }
            }
        }
        frontier = std::move(next);
    }
    throw Error("blocks not connected in the Hamming graph");  // cannot happen
}

int block_distance_grouped(const GroupedWeightPartition& g, int r, int s) {
    if (!g.consecutive()) throw NotConsecutive("block distance needs interval groups");
    if (r == s) return 0;
    const auto [rlo, rhi] = g.interval(std::min(r, s));
    const auto [slo, shi] = g.interval(std::max(r, s));
    (void)rlo;
    (void)shi;
    return slo - rhi;
}

DistanceMatrix pdm(const ExplicitPartition& p, int t) {
    if (t < 1) throw InvalidArgs("t must be positive");
    const int E = p.block_count();
    DistanceMatrix m(E, t, DistanceMatrix::Role::PDM);
    const int threshold = 2 * t + 1;
    for (int i = 0; i < E; ++i) {
        // Distances beyond the threshold contribute 0, so the scan is capped.
        std::vector<int> dist = block_distances_from(p, i, threshold);
        for (int j = i + 1; j < E; ++j) m.set(i, j, std::max(threshold - dist[j], 0));
    }
    return m;
}

DistanceMatrix pdrm(const ExplicitPartition& p, int t, const std::vector<WordRank>& vectors) {
    if (t < 1) throw InvalidArgs("t must be positive");
    const Space& space = p.space();
    for (WordRank u : vectors) {
        if (u >= space.size()) throw InvalidArgs("vector outside the space");
    }
    const int M = static_cast<int>(vectors.size());
    DistanceMatrix m(M, t, DistanceMatrix::Role::PDRM);
    for (int i = 0; i < M; ++i) {
        for (int j = i + 1; j < M; ++j) {
            if (p.block_of(vectors[i]) == p.block_of(vectors[j])) continue;
            m.set(i, j, std::max(2 * t + 1 - space.distance(vectors[i], vectors[j]), 0));
        }
    }
    return m;
}

DistanceMatrix pdrm_grouped(const GroupedWeightPartition& g, int t) {
    if (t < 1) throw InvalidArgs("t must be positive");
    DistanceMatrix m(g.k() + 1, t, DistanceMatrix::Role::PDRM);
    for (int i = 0; i <= g.k(); ++i) {
        for (int j = i + 1; j <= g.k(); ++j) {
            if (g.group_of_weight(i) == g.group_of_weight(j)) continue;
            m.set(i, j, std::max(2 * t + 1 - (j - i), 0));
        }
    }
    return m;
}

}  // namespace fcpc
