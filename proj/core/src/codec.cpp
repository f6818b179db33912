#include "fcpc/codec.hpp"

#include <algorithm>
#include <set>

namespace fcpc {

namespace {

std::vector<std::vector<int>> validated_words(const Field& field, int r, std::vector<std::vector<int>> words) {
    for (const auto& w : words) {
        if (static_cast<int>(w.size()) != r) throw SizeMismatch("redundancy word length differs from r");
        for (int sym : w) {
            if (sym < 0 || sym >= field.q()) throw BadFormat("redundancy symbol out of field range");
        }
    }
    return words;
}

int digit_distance(const std::vector<int>& a, const std::vector<int>& b) {
    int d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

}  // namespace

Encoding Encoding::dense(PartitionSpec partition, int t, int r, std::vector<std::vector<int>> words,
                         std::vector<uint32_t> word_index_of_rank) {
    partition.space().require_materializable();
    if (word_index_of_rank.size() != partition.space().size()) throw SizeMismatch("dense rule must cover every rank");
    Encoding e(std::move(partition), t, r, RuleKind::Dense);
    e.words_ = validated_words(e.space().field(), r, std::move(words));
    for (uint32_t idx : word_index_of_rank) {
        if (idx >= e.words_.size()) throw InvalidArgs("rule points outside the word table");
    }
    e.index_ = std::move(word_index_of_rank);
    return e;
}

Encoding Encoding::per_block(PartitionSpec partition, int t, int r, std::vector<std::vector<int>> words,
                             std::vector<uint32_t> word_index_of_block) {
    const int blocks = partition.materialized().block_count();
    if (static_cast<int>(word_index_of_block.size()) != blocks) throw SizeMismatch("need one entry per block");
    Encoding e(std::move(partition), t, r, RuleKind::PerBlock);
    e.words_ = validated_words(e.space().field(), r, std::move(words));
    for (uint32_t idx : word_index_of_block) {
        if (idx >= e.words_.size()) throw InvalidArgs("rule points outside the word table");
    }
    e.index_ = std::move(word_index_of_block);
    return e;
}

Encoding Encoding::per_weight(PartitionSpec partition, int t, int r, std::vector<std::vector<int>> words,
                              std::vector<uint32_t> word_index_of_weight) {
    if (static_cast<int>(word_index_of_weight.size()) != partition.space().k() + 1)
        throw SizeMismatch("need one entry per weight 0..k");
    Encoding e(std::move(partition), t, r, RuleKind::PerWeight);
    e.words_ = validated_words(e.space().field(), r, std::move(words));
    for (uint32_t idx : word_index_of_weight) {
        if (idx >= e.words_.size()) throw InvalidArgs("rule points outside the word table");
    }
    e.index_ = std::move(word_index_of_weight);
    return e;
}

Encoding Encoding::per_image(PartitionSpec partition, int t, int r, std::vector<std::vector<int>> words,
                             Contraction contraction, std::vector<uint32_t> word_index_of_image) {
    require_same_space(partition.space(), contraction.space());
    if (word_index_of_image.size() != contraction.image().size())
        throw SizeMismatch("need one entry per contraction image element");
    Encoding e(std::move(partition), t, r, RuleKind::PerImage);
    e.words_ = validated_words(e.space().field(), r, std::move(words));
    for (uint32_t idx : word_index_of_image) {
        if (idx >= e.words_.size()) throw InvalidArgs("rule points outside the word table");
    }
    e.contraction_ = std::move(contraction);
    e.index_ = std::move(word_index_of_image);
    return e;
}

std::string Encoding::rule_name() const {
    switch (kind_) {
        case RuleKind::Dense: return "dense";
        case RuleKind::PerBlock: return "per-block";
        case RuleKind::PerWeight: return "per-weight";
        case RuleKind::PerImage: return "per-image";
    }
    return "?";
}

const Contraction& Encoding::contraction() const {
    if (!contraction_) throw InvalidArgs("encoding has no contraction rule");
    return *contraction_;
}

uint32_t Encoding::redundancy_index(WordRank u) const {
    switch (kind_) {
        case RuleKind::Dense:
            return index_[u];
        case RuleKind::PerBlock:
            return index_[partition_.materialized().block_of(u)];
        case RuleKind::PerWeight:
            return index_[space().weight(u)];
        case RuleKind::PerImage:
            return index_[contraction_->image_index(u)];
    }
    throw Error("unreachable");
}

std::vector<int> Encoding::codeword(WordRank u) const {
    std::vector<int> cw = space().digits_of(u);
    const std::vector<int>& red = redundancy_of(u);
    cw.insert(cw.end(), red.begin(), red.end());
    return cw;
}

int Encoding::codeword_distance(WordRank u, WordRank v) const {
    return space().distance(u, v) + digit_distance(redundancy_of(u), redundancy_of(v));
}

EncodingCheck verify_encoding(const ExplicitPartition& p, int t, const Encoding& enc,
                              uint64_t exhaustive_pair_space_limit) {
    require_same_space(p.space(), enc.space());
    const Space& space = p.space();
    const int needed = 2 * t + 1;
    EncodingCheck result;

    if (space.size() <= exhaustive_pair_space_limit) {
        for (WordRank u = 0; u < space.size(); ++u) {
            for (WordRank v = u + 1; v < space.size(); ++v) {
                if (p.block_of(u) == p.block_of(v)) continue;
                ++result.pairs_checked;
                if (enc.codeword_distance(u, v) < needed) return {false, std::pair{u, v}, result.pairs_checked};
            }
        }
        return result;
    }

    // Message pairs further than 2t apart satisfy the bound on the message
    // part alone, so scanning radius-2t balls is exhaustive for violations.
    for (WordRank u = 0; u < space.size(); ++u) {
        bool ok = true;
        space.for_each_in_ball(u, 2 * t, [&](WordRank v) {
            if (v <= u || p.block_of(u) == p.block_of(v)) return true;
            ++result.pairs_checked;
            if (enc.codeword_distance(u, v) < needed) {
                result.ok = false;
                result.counterexample = {u, v};
                ok = false;
                return false;
            }
            return true;
        });
        if (!ok) return result;
    }
    return result;
}

EncodingCheck verify_encoding(const GroupedWeightPartition& g, int t, const Encoding& enc) {
    if (enc.space().k() != g.k()) throw DimensionMismatch("weight ranges differ");
    const bool weight_ruled = enc.rule_kind() == Encoding::RuleKind::PerWeight ||
                              (enc.rule_kind() == Encoding::RuleKind::PerImage &&
                               enc.contraction().phi_kind() == Contraction::PhiKind::Weight);
    if (!weight_ruled) throw InvalidArgs("grouped verification needs a weight-based redundancy rule");

    // Representative ladder words realize the minimal message distance
    // (the weight gap) between two weight classes, so weight pairs decide it.
    const Space& space = enc.space();
    WordRank ladder = 0;
    std::vector<WordRank> rep(g.k() + 1);
    rep[0] = 0;
    for (int w = 1; w <= g.k(); ++w) {
        ladder += space.pow_q(w - 1);
        rep[w] = ladder;
    }
    EncodingCheck result;
    for (int w1 = 0; w1 <= g.k(); ++w1) {
        for (int w2 = w1 + 1; w2 <= g.k() && w2 - w1 <= 2 * t; ++w2) {
            if (g.group_of_weight(w1) == g.group_of_weight(w2)) continue;
            ++result.pairs_checked;
            const int red = digit_distance(enc.redundancy_of(rep[w1]), enc.redundancy_of(rep[w2]));
            if ((w2 - w1) + red < 2 * t + 1) return {false, std::pair{rep[w1], rep[w2]}, result.pairs_checked};
        }
    }
    return result;
}

Encoding encode_from_dcode(const ExplicitPartition& p, int t, const Contraction& c, const DCode& code) {
    require_same_space(p.space(), c.space());
    const DistanceMatrix requirement = pdrm(p, t, c.image());
    if (const auto check = verify_dcode(requirement, code); !check.ok)
        throw CertificateMismatch("code violates the contraction-image requirement matrix");
    std::vector<uint32_t> identity(c.image().size());
    for (uint32_t i = 0; i < identity.size(); ++i) identity[i] = i;
    return Encoding::per_image(PartitionSpec::explicit_partition(p), t, code.r, code.words, c, std::move(identity));
}

Encoding encode_from_dcode(const GroupedWeightPartition& g, const Field& field, int t, const DCode& code) {
    const DistanceMatrix requirement = pdrm_grouped(g, t);
    if (const auto check = verify_dcode(requirement, code); !check.ok)
        throw CertificateMismatch("code violates the weight-ladder requirement matrix");
    std::vector<uint32_t> by_weight(g.k() + 1);
    for (int w = 0; w <= g.k(); ++w) by_weight[w] = w;
    return Encoding::per_weight(PartitionSpec::grouped_weight(field, g), t, code.r, code.words,
                                std::move(by_weight));
}

Encoding construction_locally_bounded(const ExplicitPartition& p, int t) {
    if (t < 1) throw InvalidArgs("t must be positive");
    if (!is_locally_bounded(p, 2 * t, 2))
        throw NotLocallyBounded("partition is not locally (2t,2)-bounded");
    const Space& space = p.space();
    const int r = 2 * t;
    std::vector<std::vector<int>> words = {std::vector<int>(r, 0), std::vector<int>(r, 1)};
    std::vector<uint32_t> index(space.size(), 0);
    for (WordRank u = 0; u < space.size(); ++u) {
        int32_t least = p.block_of(u);
        space.for_each_in_ball(u, 2 * t, [&](WordRank v) {
            least = std::min(least, p.block_of(v));
            return true;
        });
        index[u] = least == p.block_of(u) ? 0 : 1;
    }
    return Encoding::dense(PartitionSpec::explicit_partition(p), t, r, std::move(words), std::move(index));
}

Encoding construction_locally_bounded(const GroupedWeightPartition& g, const Field& field, int t) {
    if (t < 1) throw InvalidArgs("t must be positive");
    const int r = 2 * t;
    std::vector<uint32_t> index(g.k() + 1, 0);
    for (int w = 0; w <= g.k(); ++w) {
        std::set<int> met;
        for (int w2 = std::max(0, w - 2 * t); w2 <= std::min(g.k(), w + 2 * t); ++w2)
            met.insert(g.group_of_weight(w2));
        if (static_cast<int>(met.size()) > 2)
            throw NotLocallyBounded("grouped partition is not locally (2t,2)-bounded");
        index[w] = *met.begin() == g.group_of_weight(w) ? 0 : 1;
    }
    std::vector<std::vector<int>> words = {std::vector<int>(r, 0), std::vector<int>(r, 1)};
    return Encoding::per_weight(PartitionSpec::grouped_weight(field, g), t, r, std::move(words), std::move(index));
}

RedundancyResult optimal_redundancy(const PartitionSpec& partition, int t, RedundancyStrategy strategy,
                                    const RedundancyOptions& options) {
    if (t < 1) throw InvalidArgs("t must be positive");
    using Method = OptimalityCertificate::Method;
    const Field& field = partition.space().field();

    // Grouped-weight partitions ride the weight-ladder contraction and never
    // materialize the space; all-singleton groups make the ladder a genuine
    // full-size clique.
    if (partition.kind() == PartitionSpec::Kind::GroupedWeight &&
        (strategy == RedundancyStrategy::Auto || strategy == RedundancyStrategy::ContractionOnly ||
         strategy == RedundancyStrategy::CliqueOnly)) {
        const GroupedWeightPartition& g = partition.grouped_form();
        const bool ladder_is_clique =
            std::all_of(g.groups().begin(), g.groups().end(), [](const auto& s) { return s.size() == 1; });
        if (strategy == RedundancyStrategy::CliqueOnly && !ladder_is_clique)
            throw NotFullSize("no full-size clique for this grouped partition");
        const DistanceMatrix requirement = pdrm_grouped(g, t);
        const SearchReport search = min_dcode(requirement, field, options.search);
        OptimalityCertificate cert;
        cert.r = search.r_min;
        cert.method = ladder_is_clique ? Method::Clique : Method::Contraction;
        cert.exact = search.status == SearchReport::Status::Exact;
        cert.lower_bound_source = search.refutation;
        cert.nodes_expanded = search.nodes_expanded;
        if (!search.witness) return {cert, std::nullopt, search};
        return {cert, encode_from_dcode(g, field, t, *search.witness), search};
    }

    // Family cliques for coset, coordinate and support partitions.
    std::optional<Clique> family_clique;
    if (partition.kind() == PartitionSpec::Kind::Coset) {
        family_clique = coset_clique(partition.coset_subspace());
    } else if (partition.kind() == PartitionSpec::Kind::Coordinate) {
        std::vector<std::vector<int>> selector;
        for (int j : partition.coordinate_set()) {
            std::vector<int> row(partition.space().k(), 0);
            row[j - 1] = 1;
            selector.push_back(std::move(row));
        }
        family_clique = coset_clique(kernel_of_linear(partition.space(), selector));
    } else if (partition.kind() == PartitionSpec::Kind::Support) {
        family_clique = support_clique(field, partition.space().k(), 1);
    }

    const ExplicitPartition& p = partition.materialized();
    std::optional<Clique> clique = family_clique;
    if (!clique && strategy != RedundancyStrategy::ContractionOnly && strategy != RedundancyStrategy::FullPDRM) {
        CliqueSearchResult found = find_full_clique(p, options.clique);
        if (found.status == CliqueSearchResult::Status::Found) clique = found.clique;
        if (strategy == RedundancyStrategy::CliqueOnly && !clique)
            throw NotFullSize("no full-size clique within the search caps");
    }

    std::optional<Contraction> contraction;
    Method method = Method::FullPDRM;
    if (clique && strategy != RedundancyStrategy::ContractionOnly && strategy != RedundancyStrategy::FullPDRM) {
        contraction = clique_to_contraction(p, *clique);
        method = Method::Clique;
    } else if ((strategy == RedundancyStrategy::Auto || strategy == RedundancyStrategy::ContractionOnly) &&
               options.contraction) {
        contraction = options.contraction;
        method = Method::Contraction;
    } else if (strategy == RedundancyStrategy::ContractionOnly) {
        throw InvalidArgs("ContractionOnly needs a supplied contraction or a family rule");
    }

    DistanceMatrix requirement(0, t, DistanceMatrix::Role::PDRM);
    if (contraction) {
        requirement = pdrm(p, t, contraction->image());
    } else {
        if (p.space().size() > options.full_pdrm_space_limit)
            throw SpaceTooLarge("full requirement matrix exceeds the configured space limit");
        std::vector<WordRank> all(p.space().size());
        for (WordRank u = 0; u < all.size(); ++u) all[u] = u;
        requirement = pdrm(p, t, all);
    }

    const SearchReport search = min_dcode(requirement, field, options.search);
    OptimalityCertificate cert;
    cert.r = search.r_min;
    cert.method = method;
    cert.exact = search.status == SearchReport::Status::Exact;
    cert.lower_bound_source = search.refutation;
    cert.nodes_expanded = search.nodes_expanded;
    if (!search.witness) return {cert, std::nullopt, search};

    if (contraction) {
        return {cert, encode_from_dcode(p, t, *contraction, *search.witness), search};
    }
    std::vector<uint32_t> identity(p.space().size());
    for (uint32_t i = 0; i < identity.size(); ++i) identity[i] = i;
    Encoding enc = Encoding::dense(PartitionSpec::explicit_partition(p), t, search.witness->r,
                                   search.witness->words, std::move(identity));
    return {cert, std::move(enc), search};
}

DecodeResult decode(const Encoding& enc, const std::vector<int>& received, int t) {
    (void)t;
    const Space& space = enc.space();
    space.require_materializable();
    if (static_cast<int>(received.size()) != space.k() + enc.r())
        throw SizeMismatch("received word must have length k + r");
    const ExplicitPartition& p = enc.partition().materialized();

    DecodeResult best{0, 0, space.k() + enc.r() + 1};
    for (WordRank u = 0; u < space.size(); ++u) {
        const std::vector<int> cw = enc.codeword(u);
        int d = 0;
        for (size_t i = 0; i < cw.size() && d < best.distance; ++i) d += cw[i] != received[i];
        if (d < best.distance) best = {p.block_of(u), u, d};
    }
    return best;
}

}  // namespace fcpc
