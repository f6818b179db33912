#include "fcpc/graph.hpp"

#include <algorithm>
#include <set>

namespace fcpc {

PartitionGraph::PartitionGraph(const ExplicitPartition& p) : p_(p) {
    const int E = p_.block_count();
    dist_.assign(static_cast<size_t>(E) * E, 0);
    for (int b = 0; b < E; ++b) {
        std::vector<int> row = block_distances_from(p_, b);
        for (int c = 0; c < E; ++c) dist_[static_cast<size_t>(b) * E + c] = row[c];
    }
}

bool PartitionGraph::adjacent(WordRank u, WordRank v) const {
    const int32_t bu = p_.block_of(u), bv = p_.block_of(v);
    if (bu == bv) return false;
    return p_.space().distance(u, v) == block_distance(bu, bv);
}

bool PartitionGraph::is_full_clique(const std::vector<WordRank>& vertices) const {
    if (static_cast<int>(vertices.size()) != p_.block_count()) return false;
    std::set<int32_t> blocks;
    for (WordRank u : vertices) blocks.insert(p_.block_of(u));
    if (static_cast<int>(blocks.size()) != p_.block_count()) return false;
    for (size_t i = 0; i < vertices.size(); ++i) {
        for (size_t j = i + 1; j < vertices.size(); ++j) {
            if (!adjacent(vertices[i], vertices[j])) return false;
        }
    }
    return true;
}

std::string PartitionGraph::to_dot() const {
    const Space& space = p_.space();
    if (space.size() > 512) throw TooLarge("DOT export is for small spaces");
    std::string out = "graph partition {\n";
    for (WordRank u = 0; u < space.size(); ++u)
        out += "  \"" + space.word_string(u) + "\" [block=" + std::to_string(p_.block_of(u)) + "];\n";
    for (WordRank u = 0; u < space.size(); ++u) {
        for (WordRank v = u + 1; v < space.size(); ++v) {
            if (adjacent(u, v))
                out += "  \"" + space.word_string(u) + "\" -- \"" + space.word_string(v) + "\";\n";
        }
    }
    out += "}\n";
    return out;
}

namespace {

struct CliqueSearcher {
    const ExplicitPartition& p;
    const PartitionGraph& graph;
    const CliqueSearchOptions& options;
    std::vector<std::vector<WordRank>> candidates;  // per block, ascending
    std::vector<int> block_order;
    std::vector<WordRank> chosen;
    std::optional<std::vector<WordRank>> best;  // sorted ranks
    uint64_t nodes = 0;
    bool budget_hit = false;

    bool dfs(size_t level) {
        if (level == block_order.size()) {
            std::vector<WordRank> sorted = chosen;
            std::sort(sorted.begin(), sorted.end());
            if (!best || sorted < *best) best = std::move(sorted);
            return true;
        }
        for (WordRank u : candidates[block_order[level]]) {
            if (++nodes > options.node_budget) {
                budget_hit = true;
                return false;
            }
            bool ok = true;
            for (size_t i = 0; i < level; ++i) {
                if (!graph.adjacent(chosen[i], u)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(u);
            const bool keep_going = dfs(level + 1);
            chosen.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

CliqueSearchResult find_full_clique(const ExplicitPartition& p, const CliqueSearchOptions& options) {
    if (p.block_count() > options.max_blocks)
        return {CliqueSearchResult::Status::BudgetExceeded, std::nullopt, 0};

    PartitionGraph graph(p);
    const Space& space = p.space();
    const int E = p.block_count();

    // A word can only appear in a full clique if it realizes the block
    // distance toward every other block; one distance sweep per block
    // exposes exactly that set.
    std::vector<std::vector<int>> word_dist_to_block(E);
    for (int b = 0; b < E; ++b) {
        std::vector<int> dist(space.size(), -1);
        std::vector<WordRank> frontier = p.members(b);
        for (WordRank u : frontier) dist[u] = 0;
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
                        if (dist[v] != -1) continue;
                        dist[v] = depth;
                        next.push_back(v);
                    }
                }
            }
            frontier = std::move(next);
        }
        word_dist_to_block[b] = std::move(dist);
    }

    CliqueSearcher searcher{p, graph, options, {}, {}, {}, std::nullopt, 0, false};
    searcher.candidates.resize(E);
    for (WordRank u = 0; u < space.size(); ++u) {
        const int32_t b = p.block_of(u);
        bool keep = true;
        for (int c = 0; c < E && keep; ++c) {
            if (c != b && word_dist_to_block[c][u] != graph.block_distance(b, c)) keep = false;
        }
        if (keep) searcher.candidates[b].push_back(u);
    }
    for (int b = 0; b < E; ++b) {
        if (searcher.candidates[b].empty())
            return {CliqueSearchResult::Status::NotFound, std::nullopt, searcher.nodes};
    }

    searcher.block_order.resize(E);
    for (int b = 0; b < E; ++b) searcher.block_order[b] = b;
    std::sort(searcher.block_order.begin(), searcher.block_order.end(), [&](int a, int b) {
        if (searcher.candidates[a].size() != searcher.candidates[b].size())
            return searcher.candidates[a].size() < searcher.candidates[b].size();
        return a < b;
    });

    searcher.dfs(0);
    if (searcher.budget_hit) return {CliqueSearchResult::Status::BudgetExceeded, std::nullopt, searcher.nodes};
    if (!searcher.best) return {CliqueSearchResult::Status::NotFound, std::nullopt, searcher.nodes};
    return {CliqueSearchResult::Status::Found, Clique{space, *searcher.best}, searcher.nodes};
}

Clique weight_clique(const Field& field, int k, int a) {
    if (a <= 0 || a >= field.q()) throw InvalidArgs("need a nonzero field symbol");
    Space space(field, k);
    std::vector<WordRank> vertices;
    WordRank u = 0;
    vertices.push_back(u);
    for (int i = 0; i < k; ++i) {
        u += static_cast<WordRank>(a) * space.pow_q(i);
        vertices.push_back(u);
    }
    std::sort(vertices.begin(), vertices.end());
    return Clique{space, std::move(vertices)};
}

Clique support_clique(const Field& field, int k, int a) {
    if (a <= 0 || a >= field.q()) throw InvalidArgs("need a nonzero field symbol");
    if (k > 30) throw TooLarge("support cliques need k <= 30");
    Space space(field, k);
    std::vector<WordRank> vertices;
    vertices.reserve(uint64_t(1) << k);
    for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
        WordRank u = 0;
        for (int i = 0; i < k; ++i) {
            if (mask & (uint64_t(1) << i)) u += static_cast<WordRank>(a) * space.pow_q(i);
        }
        vertices.push_back(u);
    }
    std::sort(vertices.begin(), vertices.end());
    return Clique{space, std::move(vertices)};
}

std::optional<Clique> coset_clique(const Subspace& v) {
    const Space& space = v.space();
    const int ell = space.k() - v.dim();

    // Positions t_1..t_ell of standard basis vectors hitting pairwise
    // distinct cosets e_i + V, first index per coset.
    std::vector<int> positions;
    for (int i = 0; i < space.k(); ++i) {
        const WordRank e_i = space.pow_q(i);
        if (v.contains(e_i)) continue;
        bool fresh = true;
        for (int t : positions) {
            if (v.contains(space.sub(e_i, space.pow_q(t)))) {
                fresh = false;
                break;
            }
        }
        if (fresh) positions.push_back(i);
    }
    if (static_cast<int>(positions.size()) != ell) return std::nullopt;

    uint64_t count = 1;
    for (int i = 0; i < ell; ++i) {
        count *= space.q();
        if (count > space_cap()) throw SpaceTooLarge("clique too large to enumerate");
    }
    // v(alpha) = sum alpha_i e_{t_i}: digit t_i carries alpha_i.
    std::vector<WordRank> vertices;
    vertices.reserve(count);
    for (uint64_t n = 0; n < count; ++n) {
        uint64_t rest = n;
        WordRank u = 0;
        for (int i = 0; i < ell; ++i) {
            const int alpha = static_cast<int>(rest % space.q());
            rest /= space.q();
            u += static_cast<WordRank>(alpha) * space.pow_q(positions[i]);
        }
        vertices.push_back(u);
    }
    std::sort(vertices.begin(), vertices.end());
    return Clique{space, std::move(vertices)};
}

bool is_locally_bounded(const ExplicitPartition& p, int rho, int lambda) {
    if (rho < 0 || lambda < 1) throw InvalidArgs("need rho >= 0 and lambda >= 1");
    const Space& space = p.space();
    for (WordRank u = 0; u < space.size(); ++u) {
        std::set<int32_t> blocks;
        bool within = true;
        space.for_each_in_ball(u, rho, [&](WordRank v) {
            blocks.insert(p.block_of(v));
            if (static_cast<int>(blocks.size()) > lambda) {
                within = false;
                return false;
            }
            return true;
        });
        if (!within) return false;
    }
    return true;
}

}  // namespace fcpc
