#include "fcpc/cases.hpp"

#include <algorithm>
#include <chrono>

namespace fcpc {

namespace {

struct CaseFailure {
    std::string what;
};
struct CaseBudget {};

struct Ctx {
    uint64_t budget;
    uint64_t nodes = 0;
    Json artifacts = Json::object();
    Json checks = Json::array();

    void gate() const {
        if (budget == 0) throw CaseBudget{};
    }
    uint64_t remaining() const { return budget > nodes ? budget - nodes : 0; }
    void spend(uint64_t n) {
        nodes += n;
        if (nodes > budget) throw CaseBudget{};
    }
    void check(bool ok, const std::string& name, const std::string& source) {
        checks.push_back(Json{{"name", name}, {"source", source}, {"ok", ok}});
        if (!ok) throw CaseFailure{name};
    }
    SearchReport exact_search(const DistanceMatrix& d, const Field& field, const std::string& name,
                              int r_max = 32) {
        SearchReport report = min_dcode(d, field, DCodeSearchOptions{r_max, remaining()});
        spend(report.nodes_expanded);
        if (report.status == SearchReport::Status::BudgetExceeded) throw CaseBudget{};
        check(report.status == SearchReport::Status::Exact, name + ": exact status", "computed");
        return report;
    }
};

CaseResult run_case(const std::string& id, uint64_t budget, const std::function<void(Ctx&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    CaseResult result;
    result.id = id;
    Ctx ctx{budget};
    try {
        ctx.gate();
        body(ctx);
    } catch (const CaseFailure& f) {
        result.status = CaseResult::Status::Fail;
        result.detail = f.what;
    } catch (const CaseBudget&) {
        result.status = CaseResult::Status::BudgetExceeded;
        result.detail = "node budget exhausted";
    } catch (const std::exception& e) {
        result.status = CaseResult::Status::Fail;
        result.detail = e.what();
    }
    ctx.artifacts["checks"] = ctx.checks;
    result.artifacts = std::move(ctx.artifacts);
    result.nodes_used = ctx.nodes;
    result.milliseconds =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

ExplicitPartition partition_from_word_lists(const Space& space, const std::vector<std::vector<std::string>>& lists) {
    std::vector<int32_t> labels(space.size(), -1);
    for (size_t b = 0; b < lists.size(); ++b) {
        for (const std::string& w : lists[b]) labels[space.parse_word(w)] = static_cast<int32_t>(b);
    }
    for (int32_t l : labels) {
        if (l == -1) throw CaseFailure{"partition word lists do not cover the space"};
    }
    return ExplicitPartition(space, std::move(labels));
}

Encoding per_block_from_table(const ExplicitPartition& p, int t, int r,
                              const std::vector<std::pair<std::string, std::string>>& member_to_redundancy) {
    const Space& space = p.space();
    Space red_space(space.field(), r);
    std::vector<std::vector<int>> words;
    std::vector<uint32_t> index(p.block_count(), 0);
    std::vector<bool> seen(p.block_count(), false);
    for (const auto& [member, redundancy] : member_to_redundancy) {
        const int32_t block = p.block_of(space.parse_word(member));
        words.push_back(red_space.digits_of(red_space.parse_word(redundancy)));
        index[block] = static_cast<uint32_t>(words.size() - 1);
        seen[block] = true;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw CaseFailure{"redundancy table misses a block"};
    return Encoding::per_block(PartitionSpec::explicit_partition(p), t, r, std::move(words), std::move(index));
}

// ---- individual cases ----------------------------------------------------

void case_ex2(Ctx& ctx) {
    Field f2(2);
    Space space(f2, 4);
    const std::vector<std::vector<std::vector<int>>> maps = {
        {{1, 1, 1, 0}, {0, 1, 1, 0}},
        {{1, 1, 1, 0}, {1, 0, 0, 0}},
        {{1, 0, 0, 0}, {0, 1, 1, 0}},
    };
    std::vector<Subspace> kernels;
    for (const auto& m : maps) kernels.push_back(kernel_of_linear(space, m));
    ctx.check(kernels[0] == kernels[1] && kernels[1] == kernels[2], "three maps share one kernel", "given");
    const Subspace common = kernel_intersection(kernels);
    ctx.check(common.dim() == 2, "common kernel has dimension 2", "given");
    std::vector<std::string> expected_members = {"0000", "0001", "0110", "0111"};
    std::vector<WordRank> expected_ranks;
    for (const auto& w : expected_members) expected_ranks.push_back(space.parse_word(w));
    std::sort(expected_ranks.begin(), expected_ranks.end());
    ctx.check(common.enumerate() == expected_ranks, "kernel members match the block list", "given");

    const ExplicitPartition p = coset_partition(common);
    ctx.check(p.block_count() == 4, "four cosets", "given");
    ctx.artifacts["partition"] = partition_to_json(PartitionSpec::explicit_partition(p));

    const std::vector<std::pair<std::string, std::string>> table = {
        {"0000", "000000"}, {"0010", "111100"}, {"1000", "001111"}, {"1100", "110011"}};
    const Encoding enc = per_block_from_table(p, 2, 6, table);
    ctx.artifacts["encoding"] = encoding_to_json(enc);
    ctx.check(verify_encoding(p, 2, enc).ok, "given redundancy table verifies at t=2", "given");

    // negative control: one corrupted redundancy symbol must be caught
    auto corrupted_table = table;
    corrupted_table[1].second = "011100";
    const Encoding bad = per_block_from_table(p, 2, 6, corrupted_table);
    const EncodingCheck check = verify_encoding(p, 2, bad);
    ctx.check(!check.ok && check.counterexample.has_value(), "corrupted table fails with a witness pair",
              "computed");
}

void case_ex4(Ctx& ctx) {
    Field f2(2);
    Space space(f2, 3);
    const Subspace ker_f1 = kernel_of_linear(space, {{1, 0, 0}});
    const Subspace ker_f2 = kernel_of_linear(space, {{0, 1, 0}});
    const Subspace common = kernel_intersection({ker_f1, ker_f2});
    std::vector<WordRank> expected = {space.parse_word("000"), space.parse_word("001")};
    std::sort(expected.begin(), expected.end());
    ctx.check(common.enumerate() == expected, "kernel intersection is {000, 001}", "given");

    const ExplicitPartition p = coset_partition(common);
    ctx.check(p.block_count() == 4, "four cosets", "given");

    const std::vector<std::pair<std::string, std::string>> table = {
        {"000", "000"}, {"100", "110"}, {"010", "101"}, {"110", "011"}};
    const Encoding enc = per_block_from_table(p, 1, 3, table);
    ctx.artifacts["encoding"] = encoding_to_json(enc);
    ctx.check(verify_encoding(p, 1, enc).ok, "eight-row table verifies at t=1", "given");

    // each single functional alone needs exactly 2 redundancy symbols
    for (const Subspace& ker : {ker_f1, ker_f2}) {
        const RedundancyResult single = optimal_redundancy(PartitionSpec::coset(ker), 1, RedundancyStrategy::Auto,
                                                           RedundancyOptions{{32, ctx.remaining()}, {}, {}, 1 << 11});
        ctx.spend(single.certificate.nodes_expanded);
        if (!single.certificate.exact) throw CaseBudget{};
        ctx.check(single.certificate.r == 2, "single-functional redundancy is 2", "computed");
    }

    const PartitionGains gains = partition_gains({2, 2}, 3, 3);
    ctx.artifacts["gains"] = gains_to_json(gains);
    ctx.check(gains.redundancy_gain == Rational(1, 2), "redundancy gain 1/2", "given");
    ctx.check(gains.rate_gain == Rational(1, 6), "rate gain 1/6", "given");
}

void case_ex10_weight(Ctx& ctx) {
    Field f3(3);
    const GroupedWeightPartition w = weight_partition(3);
    const DistanceMatrix d = pdrm_grouped(w, 2);
    const std::vector<std::vector<int>> expected = {
        {0, 4, 3, 2}, {4, 0, 4, 3}, {3, 4, 0, 4}, {2, 3, 4, 0}};
    bool match = d.n() == 4;
    for (int i = 0; i < 4 && match; ++i) {
        for (int j = 0; j < 4 && match; ++j) match = d.at(i, j) == expected[i][j];
    }
    ctx.check(match, "weight-ladder requirement matrix matches entry for entry", "given");
    ctx.artifacts["pdrm"] = matrix_to_json(d);

    Space code_space(f3, 4);
    DCode given{f3, 4, {}};
    for (const char* w4 : {"0000", "1111", "0222", "2001"})
        given.words.push_back(code_space.digits_of(code_space.parse_word(w4)));
    ctx.check(verify_dcode(d, given).ok, "reference length-4 code verifies", "given");

    ctx.check(plotkin_lower(d, f3) == 4, "plotkin lower bound is 4", "given");

    const SearchReport report = ctx.exact_search(d, f3, "minimal length search");
    ctx.artifacts["search"] = search_report_to_json(report);
    ctx.check(report.r_min == 4, "search settles the minimal length at 4", "computed");
    ctx.check(verify_dcode(d, *report.witness).ok, "search witness verifies", "computed");

    const RedundancyResult optimal =
        optimal_redundancy(PartitionSpec::grouped_weight(f3, w), 2, RedundancyStrategy::Auto,
                           RedundancyOptions{{32, ctx.remaining()}, {}, {}, 1 << 11});
    ctx.spend(optimal.certificate.nodes_expanded);
    ctx.check(optimal.certificate.exact && optimal.certificate.r == 4 &&
                  optimal.certificate.method == OptimalityCertificate::Method::Clique,
              "optimal redundancy 4 via the ladder clique", "computed");
    ctx.artifacts["certificate"] = certificate_to_json(optimal.certificate);
}

void case_ex10_support(Ctx& ctx) {
    Field f3(3);
    Space space(f3, 3);
    const ExplicitPartition p = support_partition(space);
    std::vector<uint64_t> sizes;
    for (int b = 0; b < p.block_count(); ++b) sizes.push_back(p.block_size(b));
    std::sort(sizes.begin(), sizes.end());
    ctx.check(sizes == std::vector<uint64_t>({1, 2, 2, 2, 4, 4, 4, 8}), "eight blocks of sizes 1,2,2,2,4,4,4,8",
              "given");

    const Clique clique = support_clique(f3, 3, 1);
    ctx.check(PartitionGraph(p).is_full_clique(clique.vertices), "support clique passes the adjacency oracle",
              "computed");

    const DistanceMatrix d = pdrm(p, 2, clique.vertices);
    Space code_space(f3, 6);
    // clique vertices sort by rank, which lists supports as
    // {}, {1}, {2}, {1,2}, {3}, {1,3}, {2,3}, {1,2,3}
    const std::vector<std::string> reference = {"000000", "001111", "001222", "010021",
                                                "010112", "002022", "002101", "000210"};
    DCode given{f3, 6, {}};
    for (const std::string& w : reference) given.words.push_back(code_space.digits_of(code_space.parse_word(w)));
    ctx.check(verify_dcode(d, given).ok, "reference length-6 code verifies", "given");

    const BoundReport bounds = support_bounds(3, 2, f3);
    ctx.artifacts["bounds"] = bound_report_to_json(bounds);
    ctx.check(bounds.lower == 5, "support lower bound is 5", "given");
    const Rational exact = *bounds.lower_exact;
    ctx.check(exact == Rational(92, 21), "pre-ceiling value is 92/21, inside [4.38, 4.39]", "given");

    const SearchReport report = ctx.exact_search(d, f3, "support minimal length search", 8);
    ctx.artifacts["search"] = search_report_to_json(report);
    ctx.check(report.r_min == 5 || report.r_min == 6, "search settles the value inside {5, 6}", "computed");
    ctx.artifacts["support_r_min"] = Json{{"value", report.r_min}, {"source", "computed"}};
    ctx.check(verify_dcode(d, *report.witness).ok, "search witness verifies", "computed");
}

void case_ex12(Ctx& ctx) {
    Field f2(2);
    Space space(f2, 4);
    const std::vector<std::vector<std::string>> blocks = {
        {"0000", "0001", "0010", "0100"},
        {"0011", "0101", "0110", "1001", "1010", "1100", "0111", "1011", "1101", "1000", "1110"},
        {"1111"}};
    const ExplicitPartition p = partition_from_word_lists(space, blocks);
    const int32_t b1 = p.block_of(space.parse_word("0000"));
    const int32_t b2 = p.block_of(space.parse_word("0011"));
    const int32_t b3 = p.block_of(space.parse_word("1111"));
    ctx.check(block_distance(p, b1, b2) == 1 && block_distance(p, b2, b3) == 1 && block_distance(p, b1, b3) == 3,
              "block distances are 1, 1, 3", "given");

    // the image set pins phi on the middle block: words nearer the first
    // block contract onto 0011, the rest onto 0111
    std::vector<WordRank> image;
    for (const char* w : {"0001", "0011", "0111", "1111"}) image.push_back(space.parse_word(w));
    std::sort(image.begin(), image.end());
    auto image_slot = [&](const char* w) {
        const WordRank rank = space.parse_word(w);
        return static_cast<uint32_t>(std::find(image.begin(), image.end(), rank) - image.begin());
    };
    std::vector<uint32_t> phi(space.size(), 0);
    for (const std::string& w : blocks[0]) phi[space.parse_word(w)] = image_slot("0001");
    for (const char* w : {"0011", "0101", "0110", "1001", "1010", "1100", "1000"})
        phi[space.parse_word(w)] = image_slot("0011");
    for (const char* w : {"0111", "1011", "1101", "1110"}) phi[space.parse_word(w)] = image_slot("0111");
    phi[space.parse_word("1111")] = image_slot("1111");
    const Contraction contraction = Contraction::dense(space, image, std::move(phi));
    ctx.artifacts["contraction"] = contraction_to_json(contraction);
    const ContractionCheck check = verify_contraction(p, contraction);
    ctx.check(check.ok && check.exhaustive, "reference contraction verifies exhaustively", "given");

    const CliqueSearchResult clique = find_full_clique(p);
    ctx.spend(clique.nodes_expanded);
    ctx.check(clique.status == CliqueSearchResult::Status::NotFound, "no full-size clique exists", "given");

    RedundancyOptions via_contraction{{32, ctx.remaining()}, {}, contraction, 1 << 11};
    const RedundancyResult contracted =
        optimal_redundancy(PartitionSpec::explicit_partition(p), 1, RedundancyStrategy::ContractionOnly,
                           via_contraction);
    ctx.spend(contracted.certificate.nodes_expanded);
    const RedundancyResult full = optimal_redundancy(PartitionSpec::explicit_partition(p), 1,
                                                     RedundancyStrategy::FullPDRM,
                                                     RedundancyOptions{{32, ctx.remaining()}, {}, {}, 1 << 11});
    ctx.spend(full.certificate.nodes_expanded);
    if (!contracted.certificate.exact || !full.certificate.exact) throw CaseBudget{};
    ctx.check(contracted.certificate.r == full.certificate.r,
              "contraction route and full-matrix route agree on the redundancy", "computed");
    ctx.artifacts["redundancy"] = Json{{"value", full.certificate.r}, {"source", "computed"}};
}

void case_ex3_join35(Ctx& ctx) {
    Field f2(2);
    const GroupedWeightPartition d6 = hwdf_partition(35, 6);
    const GroupedWeightPartition d9 = hwdf_partition(35, 9);
    const GroupedWeightPartition joined = join_grouped(d6, d9);
    ctx.check(joined == hwdf_partition(35, 3), "join of the width-6 and width-9 partitions has width 3", "given");
    ctx.check(joined.group_count() == 12, "twelve interval groups", "given");
    ctx.artifacts["join"] = partition_to_json(PartitionSpec::grouped_weight(f2, joined));

    const DistanceMatrix d = pdrm_grouped(joined, 2);
    const SearchReport report = ctx.exact_search(d, f2, "banded minimal length search");
    ctx.artifacts["search"] = search_report_to_json(report);
    ctx.check(report.r_min == 4, "minimal redundancy is 4", "computed");
    ctx.check(report.r_min == trivial_lower(joined.group_count(), 2), "matches the two-block floor 2t",
              "computed");

    const Encoding enc = encode_from_dcode(joined, f2, 2, *report.witness);
    ctx.check(verify_encoding(joined, 2, enc).ok, "weight-rule encoding verifies", "computed");

    const PartitionGains gains = partition_gains({4, 4}, 4, 35);
    ctx.artifacts["gains"] = gains_to_json(gains);
    ctx.check(gains.redundancy_gain == Rational(2, 1) && gains.rate_gain == Rational(4, 39),
              "gains are 2 and 4/39", "given");

    const BoundReport bounds = join_bounds({4, 4}, 35, 2, 46);
    ctx.artifacts["bounds"] = bound_report_to_json(bounds);
    ctx.check(bounds.lower == 4 && bounds.upper && *bounds.upper == 8,
              "join bounds are [4, 8] with the supplied full-recovery length", "given");
}

void case_ex8_coord(Ctx& ctx) {
    Field f3(3);
    Space space(f3, 3);
    const std::vector<int> J = {2, 3};
    const ExplicitPartition p = coordinate_partition(space, J);
    ctx.check(p.block_count() == 9, "nine blocks", "given");
    bool uniform = true;
    for (int b = 0; b < 9; ++b) uniform = uniform && p.block_size(b) == 3;
    ctx.check(uniform, "every block has three words", "given");

    const Subspace fixed = kernel_of_linear(space, {{0, 1, 0}, {0, 0, 1}});
    ctx.check(p == coset_partition(fixed), "coordinate partition equals the coset partition of x_J = 0",
              "definition");

    const std::optional<Clique> clique = coset_clique(fixed);
    ctx.check(clique.has_value() && clique->size() == 9, "coset clique of size 9", "given");
    std::vector<WordRank> expected;
    for (int a2 = 0; a2 < 3; ++a2) {
        for (int a3 = 0; a3 < 3; ++a3) expected.push_back(space.rank_of({0, a2, a3}));
    }
    std::sort(expected.begin(), expected.end());
    ctx.check(clique->vertices == expected, "clique vertices fix the first coordinate to zero", "given");
    ctx.check(PartitionGraph(p).is_full_clique(clique->vertices), "clique passes the adjacency oracle",
              "computed");
    ctx.artifacts["clique"] = clique_to_json(*clique);
}

void case_ex_f4_support(Ctx& ctx) {
    Field f4(4);
    ctx.check(f4.mul(2, 2) == 3, "squaring the generator gives generator plus one", "given");
    Space space(f4, 2);
    const ExplicitPartition p = support_partition(space);
    std::vector<uint64_t> sizes;
    for (int b = 0; b < p.block_count(); ++b) sizes.push_back(p.block_size(b));
    std::sort(sizes.begin(), sizes.end());
    ctx.check(sizes == std::vector<uint64_t>({1, 3, 3, 9}), "four blocks of sizes 1, 3, 3, 9", "given");

    const Clique clique = support_clique(f4, 2, 1);
    std::vector<WordRank> expected = {space.rank_of({0, 0}), space.rank_of({1, 0}), space.rank_of({0, 1}),
                                      space.rank_of({1, 1})};
    std::sort(expected.begin(), expected.end());
    ctx.check(clique.vertices == expected, "clique is the four zero-one words", "given");
    ctx.check(PartitionGraph(p).is_full_clique(clique.vertices), "clique passes the adjacency oracle",
              "computed");
    ctx.artifacts["clique"] = clique_to_json(clique);
}

void case_ex17_coset_f2_5(Ctx& ctx) {
    Field f2(2);
    Space space(f2, 5);
    const Subspace v(space, {{1, 1, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
    ctx.check(v.dim() == 3, "subspace has dimension 3", "given");
    const ExplicitPartition p = coset_partition(v);
    ctx.check(p.block_count() == 4, "four cosets", "given");

    const CliqueSearchResult clique = find_full_clique(p);
    ctx.spend(clique.nodes_expanded);
    ctx.check(clique.status == CliqueSearchResult::Status::NotFound, "no full-size clique exists", "given");
    ctx.check(!coset_clique(v).has_value(), "standard-basis coset condition fails", "computed");

    const std::optional<Contraction> contraction = coset_contraction(v, {1, 2, 3});
    ctx.check(contraction.has_value(), "masking to the first three coordinates contracts the partition", "given");
    ctx.check(contraction->image().size() == 8, "image has 2^3 = 8 words", "given");
    const ContractionCheck check = verify_contraction(p, *contraction);
    ctx.check(check.ok && check.exhaustive, "mask contraction verifies exhaustively", "computed");
    ctx.artifacts["contraction"] = contraction_to_json(*contraction);
}

}  // namespace

const std::vector<ExampleCase>& example_cases() {
    static const std::vector<ExampleCase> cases = {
        {"ex2", "coset partition of F_2^4 shared by three linear maps, t=2",
         [](uint64_t b) { return run_case("ex2", b, case_ex2); }},
        {"ex4", "two linear functionals on F_2^3 joined via kernel intersection, t=1",
         [](uint64_t b) { return run_case("ex4", b, case_ex4); }},
        {"ex10-weight", "weight partition of F_3^3: ladder matrix, bounds, exact search",
         [](uint64_t b) { return run_case("ex10-weight", b, case_ex10_weight); }},
        {"ex10-support", "support partition of F_3^3: clique, bounds, exact search",
         [](uint64_t b) { return run_case("ex10-support", b, case_ex10_support); }},
        {"ex12", "three-block partition of F_2^4 without a full clique but with a contraction",
         [](uint64_t b) { return run_case("ex12", b, case_ex12); }},
        {"ex3-join35", "width-6 and width-9 weight intervals at k=35 joined into width 3",
         [](uint64_t b) { return run_case("ex3-join35", b, case_ex3_join35); }},
        {"ex8-coord", "coordinate partition of F_3^3 on J={2,3} and its size-9 clique",
         [](uint64_t b) { return run_case("ex8-coord", b, case_ex8_coord); }},
        {"ex-f4-support", "support partition of F_4^2 and its size-4 clique",
         [](uint64_t b) { return run_case("ex-f4-support", b, case_ex_f4_support); }},
        {"ex17-coset-f2-5", "coset partition of F_2^5 with a mask contraction of size 8",
         [](uint64_t b) { return run_case("ex17-coset-f2-5", b, case_ex17_coset_f2_5); }},
    };
    return cases;
}

const ExampleCase& find_case(const std::string& id) {
    for (const ExampleCase& c : example_cases()) {
        if (c.id == id) return c;
    }
    throw InvalidArgs("unknown example id: " + id);
}

std::vector<CaseResult> run_all_examples(uint64_t total_node_budget) {
    std::vector<CaseResult> results;
    uint64_t remaining = total_node_budget;
    for (const ExampleCase& c : example_cases()) {
        CaseResult result = c.run(remaining);
        remaining = remaining > result.nodes_used ? remaining - result.nodes_used : 0;
        results.push_back(std::move(result));
    }
    return results;
}

}  // namespace fcpc
