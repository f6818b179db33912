#ifndef FCPC_CODEC_HPP
#define FCPC_CODEC_HPP

#include <optional>
#include <string>
#include <vector>

#include "fcpc/bounds.hpp"
#include "fcpc/contraction.hpp"
#include "fcpc/dcode.hpp"
#include "fcpc/graph.hpp"

namespace fcpc {

/**
 * A systematic encoding over a partition: codeword(u) = (u, redundancy(u)),
 * total length k + r. Cross-block codewords must sit at distance >= 2t+1.
 * The redundancy rule is stored dense, per block, per Hamming weight, or per
 * contraction image, so weight-based rules work without q^k tables.
 */
class Encoding {
public:
    enum class RuleKind { Dense, PerBlock, PerWeight, PerImage };

    static Encoding dense(PartitionSpec partition, int t, int r, std::vector<std::vector<int>> words,
                          std::vector<uint32_t> word_index_of_rank);
    static Encoding per_block(PartitionSpec partition, int t, int r, std::vector<std::vector<int>> words,
                              std::vector<uint32_t> word_index_of_block);
    static Encoding per_weight(PartitionSpec partition, int t, int r, std::vector<std::vector<int>> words,
                               std::vector<uint32_t> word_index_of_weight);
    static Encoding per_image(PartitionSpec partition, int t, int r, std::vector<std::vector<int>> words,
                              Contraction contraction, std::vector<uint32_t> word_index_of_image);

    const PartitionSpec& partition() const { return partition_; }
    const Space& space() const { return partition_.space(); }
    int t() const { return t_; }
    int r() const { return r_; }
    RuleKind rule_kind() const { return kind_; }
    std::string rule_name() const;

    const std::vector<std::vector<int>>& redundancy_words() const { return words_; }
    const std::vector<uint32_t>& index_table() const { return index_; }
    const Contraction& contraction() const;

    uint32_t redundancy_index(WordRank u) const;
    const std::vector<int>& redundancy_of(WordRank u) const { return words_[redundancy_index(u)]; }

    /// Message digits followed by redundancy digits; length k + r.
    std::vector<int> codeword(WordRank u) const;

    /// Codeword distance d(u,v) + d(redundancy(u), redundancy(v)).
    int codeword_distance(WordRank u, WordRank v) const;

private:
    Encoding(PartitionSpec partition, int t, int r, RuleKind kind)
        : partition_(std::move(partition)), t_(t), r_(r), kind_(kind) {}

    PartitionSpec partition_;
    int t_;
    int r_;
    RuleKind kind_;
    std::vector<std::vector<int>> words_;
    std::vector<uint32_t> index_;  // per rank / block / weight / image index
    std::optional<Contraction> contraction_;
};

struct EncodingCheck {
    bool ok = true;
    std::optional<std::pair<WordRank, WordRank>> counterexample;
    uint64_t pairs_checked = 0;
};

/**
 * Exhaustive cross-block verification. Small spaces get the full pairwise
 * scan; larger ones enumerate radius-2t balls in message space, which is
 * still exact: pairs at message distance > 2t satisfy the bound outright.
 * The partition argument may differ from the encoding's own (coarsenings).
 */
EncodingCheck verify_encoding(const ExplicitPartition& p, int t, const Encoding& enc,
                              uint64_t exhaustive_pair_space_limit = uint64_t(1) << 11);

/// Weight-pair verification for grouped-weight partitions and weight-ruled
/// encodings; exact because the minimal message distance between two weight
/// classes is their weight gap.
EncodingCheck verify_encoding(const GroupedWeightPartition& g, int t, const Encoding& enc);

/// Encoding from a contraction and a D-code certifying the contraction-image
/// requirement matrix (checked on entry; CertificateMismatch otherwise).
Encoding encode_from_dcode(const ExplicitPartition& p, int t, const Contraction& c, const DCode& code);

/// Grouped-weight version over the implicit weight-ladder contraction.
Encoding encode_from_dcode(const GroupedWeightPartition& g, const Field& field, int t, const DCode& code);

/// Redundancy-2t construction for locally (2t,2)-bounded partitions: a word
/// gets all-zeros when its block leads the blocks met by its radius-2t ball,
/// all-ones otherwise. NotLocallyBounded if the premise fails.
Encoding construction_locally_bounded(const ExplicitPartition& p, int t);

/// The same construction evaluated per weight for grouped partitions; the
/// radius-2t ball around a weight-w word meets exactly the groups covering
/// the weight window [w-2t, w+2t].
Encoding construction_locally_bounded(const GroupedWeightPartition& g, const Field& field, int t);

enum class RedundancyStrategy { Auto, CliqueOnly, ContractionOnly, FullPDRM };

struct OptimalityCertificate {
    int r = 0;
    enum class Method { Clique, Contraction, FullPDRM } method = Method::FullPDRM;
    bool exact = false;
    std::string lower_bound_source;
    uint64_t nodes_expanded = 0;
};

struct RedundancyOptions {
    DCodeSearchOptions search;
    CliqueSearchOptions clique;
    /// Consulted by the Auto and ContractionOnly strategies for partitions
    /// without a known family rule or full clique.
    std::optional<Contraction> contraction;
    /// FullPDRM works on the whole space; guard its quadratic matrix.
    uint64_t full_pdrm_space_limit = uint64_t(1) << 11;
};

struct RedundancyResult {
    OptimalityCertificate certificate;
    /// Absent when the search ran out of budget before producing a witness.
    std::optional<Encoding> encoding;
    SearchReport search;
};

/**
 * Optimal redundancy and a witnessing encoding. Auto picks the cheapest
 * sound route: family rules (grouped-weight ladder, coset/coordinate clique,
 * support clique), then full-clique search, then a supplied contraction,
 * then the identity contraction (full requirement matrix).
 */
RedundancyResult optimal_redundancy(const PartitionSpec& partition, int t,
                                    RedundancyStrategy strategy = RedundancyStrategy::Auto,
                                    const RedundancyOptions& options = {});

struct DecodeResult {
    int32_t block = 0;
    WordRank nearest_message = 0;
    int distance = 0;
};

/// Nearest-codeword decoding over the systematic codebook, ties broken by
/// least message rank. Within distance t of a codeword this returns that
/// word's block.
DecodeResult decode(const Encoding& enc, const std::vector<int>& received, int t);

}  // namespace fcpc

#endif
