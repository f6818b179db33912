#include "fcpc/partition.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace fcpc {

namespace {

// Relabel so block ids appear in first-occurrence order of ranks.
std::pair<std::vector<int32_t>, int32_t> canonicalize(const std::vector<int32_t>& raw) {
    std::unordered_map<int32_t, int32_t> relabel;
    std::vector<int32_t> out(raw.size());
    int32_t next = 0;
    for (size_t u = 0; u < raw.size(); ++u) {
        auto [it, inserted] = relabel.try_emplace(raw[u], next);
        if (inserted) ++next;
        out[u] = it->second;
    }
    return {std::move(out), next};
}

}  // namespace

ExplicitPartition::ExplicitPartition(Space space, std::vector<int32_t> block_of) : space_(std::move(space)) {
    space_.require_materializable();
    if (block_of.size() != space_.size()) throw DimensionMismatch("labeling must cover every rank exactly once");
    auto [canon, count] = canonicalize(block_of);
    block_of_ = std::move(canon);
    block_count_ = count;
    members_.resize(block_count_);
    for (WordRank u = 0; u < block_of_.size(); ++u) members_[block_of_[u]].push_back(u);
}

const std::vector<WordRank>& ExplicitPartition::members(int32_t block) const {
    if (block < 0 || block >= block_count_) throw BadBlockId("block id " + std::to_string(block) + " out of range");
    return members_[block];
}

GroupedWeightPartition::GroupedWeightPartition(int k, std::vector<std::vector<int>> groups) : k_(k) {
    if (k < 1) throw InvalidArgs("k must be positive");
    group_of_.assign(k + 1, -1);
    for (auto& g : groups) {
        if (g.empty()) throw InvalidGroups("empty weight group");
        std::sort(g.begin(), g.end());
        for (int w : g) {
            if (w < 0 || w > k) throw InvalidGroups("weight index out of {0..k}");
            if (group_of_[w] != -1) throw InvalidGroups("weight " + std::to_string(w) + " assigned twice");
            group_of_[w] = 0;  // placeholder, reassigned below
        }
    }
    for (int w = 0; w <= k; ++w) {
        if (group_of_[w] == -1) throw InvalidGroups("weight " + std::to_string(w) + " not covered");
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    groups_ = std::move(groups);
    for (int g = 0; g < static_cast<int>(groups_.size()); ++g) {
        for (int w : groups_[g]) group_of_[w] = g;
    }
    consecutive_ = true;
    for (const auto& g : groups_) {
        if (g.back() - g.front() + 1 != static_cast<int>(g.size())) consecutive_ = false;
    }
}

int GroupedWeightPartition::group_of_weight(int w) const {
    if (w < 0 || w > k_) throw InvalidArgs("weight out of range");
    return group_of_[w];
}

std::pair<int, int> GroupedWeightPartition::interval(int group) const {
    if (!consecutive_) throw NotConsecutive("groups are not weight intervals");
    if (group < 0 || group >= group_count()) throw BadBlockId("group id out of range");
    return {groups_[group].front(), groups_[group].back()};
}

ExplicitPartition from_function(const Space& space, const std::function<int64_t(WordRank)>& f) {
    space.require_materializable();
    std::vector<int32_t> labels(space.size());
    std::unordered_map<int64_t, int32_t> ids;
    for (WordRank u = 0; u < space.size(); ++u) {
        auto [it, inserted] = ids.try_emplace(f(u), static_cast<int32_t>(ids.size()));
        labels[u] = it->second;
    }
    return ExplicitPartition(space, std::move(labels));
}

ExplicitPartition join(const ExplicitPartition& p, const ExplicitPartition& q) {
    require_same_space(p.space(), q.space());
    const int64_t qcount = q.block_count();
    std::vector<int32_t> labels(p.space().size());
    std::unordered_map<int64_t, int32_t> ids;
    for (WordRank u = 0; u < labels.size(); ++u) {
        const int64_t key = static_cast<int64_t>(p.block_of(u)) * qcount + q.block_of(u);
        auto [it, inserted] = ids.try_emplace(key, static_cast<int32_t>(ids.size()));
        labels[u] = it->second;
    }
    return ExplicitPartition(p.space(), std::move(labels));
}

bool is_refinement(const ExplicitPartition& q, const ExplicitPartition& p) {
    require_same_space(q.space(), p.space());
    std::vector<int32_t> image(q.block_count(), -1);
    for (WordRank u = 0; u < q.space().size(); ++u) {
        int32_t& assigned = image[q.block_of(u)];
        if (assigned == -1) {
            assigned = p.block_of(u);
        } else if (assigned != p.block_of(u)) {
            return false;
        }
    }
    return true;
}

ExplicitPartition coset_partition(const Subspace& v) {
    const Space& space = v.space();
    space.require_materializable();
    std::vector<WordRank> members = v.enumerate();
    std::vector<int32_t> labels(space.size(), -1);
    int32_t next = 0;
    for (WordRank u = 0; u < space.size(); ++u) {
        if (labels[u] != -1) continue;
        const int32_t id = next++;
        for (WordRank m : members) labels[space.add(u, m)] = id;
    }
    return ExplicitPartition(space, std::move(labels));
}

GroupedWeightPartition weight_partition(int k) {
    std::vector<std::vector<int>> groups;
    for (int w = 0; w <= k; ++w) groups.push_back({w});
    return GroupedWeightPartition(k, std::move(groups));
}

GroupedWeightPartition hwdf_partition(int k, int T) {
    if (T < 1) throw InvalidArgs("interval width must be positive");
    std::vector<std::vector<int>> groups;
    for (int lo = 0; lo <= k; lo += T) {
        std::vector<int> g;
        for (int w = lo; w <= std::min(k, lo + T - 1); ++w) g.push_back(w);
        groups.push_back(std::move(g));
    }
    return GroupedWeightPartition(k, std::move(groups));
}

GroupedWeightPartition grouped(int k, const std::vector<std::vector<int>>& groups) {
    return GroupedWeightPartition(k, groups);
}

GroupedWeightPartition join_grouped(const GroupedWeightPartition& a, const GroupedWeightPartition& b) {
    if (a.k() != b.k()) throw DimensionMismatch("weight ranges differ");
    std::map<std::pair<int, int>, std::vector<int>> cells;
    for (int w = 0; w <= a.k(); ++w) cells[{a.group_of_weight(w), b.group_of_weight(w)}].push_back(w);
    std::vector<std::vector<int>> groups;
    for (auto& [key, weights] : cells) groups.push_back(std::move(weights));
    return GroupedWeightPartition(a.k(), std::move(groups));
}

ExplicitPartition support_partition(const Space& space) {
    if (space.k() > 63) throw TooLarge("support masks need k <= 63");
    return from_function(space, [&](WordRank u) { return static_cast<int64_t>(space.support_mask(u)); });
}

ExplicitPartition coordinate_partition(const Space& space, const std::vector<int>& J) {
    for (int j : J) {
        if (j < 1 || j > space.k()) throw InvalidArgs("coordinate index out of [k]");
    }
    return from_function(space, [&](WordRank u) {
        int64_t key = 0;
        for (int j : J) key = key * space.q() + space.digit(u, j - 1);
        return key;
    });
}

ExplicitPartition materialize(const GroupedWeightPartition& g, const Field& field) {
    Space space(field, g.k());
    return from_function(space, [&](WordRank u) { return int64_t(g.group_of_weight(space.weight(u))); });
}

std::string function_class_size(uint64_t H, uint64_t E) {
    if (E < 1 || H < E) throw InvalidArgs("need H >= E >= 1");
    // little-endian base-1e9 accumulator; exact for any H
    std::vector<uint64_t> acc{1};
    constexpr uint64_t base = 1000000000;
    for (uint64_t factor = H - E + 1; factor <= H; ++factor) {
        uint64_t carry = 0;
        for (auto& limb : acc) {
            const uint64_t value = limb * factor + carry;
            limb = value % base;
            carry = value / base;
        }
        while (carry != 0) {
            acc.push_back(carry % base);
            carry /= base;
        }
    }
    std::string out = std::to_string(acc.back());
    for (auto it = acc.rbegin() + 1; it != acc.rend(); ++it) {
        std::string limb = std::to_string(*it);
        out += std::string(9 - limb.size(), '0') + limb;
    }
    return out;
}

PartitionSpec PartitionSpec::explicit_partition(ExplicitPartition p) {
    PartitionSpec spec(Kind::Explicit, p.space());
    spec.explicit_ = std::move(p);
    return spec;
}

PartitionSpec PartitionSpec::grouped_weight(const Field& field, GroupedWeightPartition g) {
    PartitionSpec spec(Kind::GroupedWeight, Space(field, g.k()));
    spec.grouped_ = std::move(g);
    return spec;
}

PartitionSpec PartitionSpec::coset(Subspace v) {
    PartitionSpec spec(Kind::Coset, v.space());
    spec.subspace_ = std::move(v);
    return spec;
}

PartitionSpec PartitionSpec::coordinate(Space space, std::vector<int> J) {
    for (int j : J) {
        if (j < 1 || j > space.k()) throw InvalidArgs("coordinate index out of [k]");
    }
    std::sort(J.begin(), J.end());
    PartitionSpec spec(Kind::Coordinate, std::move(space));
    spec.coord_J_ = std::move(J);
    return spec;
}

PartitionSpec PartitionSpec::support(Space space) { return PartitionSpec(Kind::Support, std::move(space)); }

const ExplicitPartition& PartitionSpec::explicit_form() const {
    if (kind_ != Kind::Explicit) throw InvalidArgs("partition is not explicit");
    return *explicit_;
}

const GroupedWeightPartition& PartitionSpec::grouped_form() const {
    if (kind_ != Kind::GroupedWeight) throw InvalidArgs("partition is not grouped-weight");
    return *grouped_;
}

const Subspace& PartitionSpec::coset_subspace() const {
    if (kind_ != Kind::Coset) throw InvalidArgs("partition is not a coset partition");
    return *subspace_;
}

const std::vector<int>& PartitionSpec::coordinate_set() const {
    if (kind_ != Kind::Coordinate) throw InvalidArgs("partition is not a coordinate partition");
    return coord_J_;
}

const ExplicitPartition& PartitionSpec::materialized() const {
    if (kind_ == Kind::Explicit) return *explicit_;
    if (!cache_) {
        switch (kind_) {
            case Kind::GroupedWeight:
                cache_ = materialize(*grouped_, space_.field());
                break;
            case Kind::Coset:
                cache_ = coset_partition(*subspace_);
                break;
            case Kind::Coordinate:
                cache_ = coordinate_partition(space_, coord_J_);
                break;
            case Kind::Support:
                cache_ = support_partition(space_);
                break;
            default:
                break;
        }
    }
    return *cache_;
}

std::string PartitionSpec::kind_name() const {
    switch (kind_) {
        case Kind::Explicit: return "explicit";
        case Kind::GroupedWeight: return "grouped-weight";
        case Kind::Coset: return "coset";
        case Kind::Coordinate: return "coordinate";
        case Kind::Support: return "support";
    }
    return "?";
}

}  // namespace fcpc
