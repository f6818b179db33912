// fcpc: build, analyze and verify function-correcting partition codes from
// the command line. Subcommands exchange JSON artifacts on files or stdout.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fcpc/cases.hpp"
#include "fcpc/json_io.hpp"

namespace {

using namespace fcpc;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgs("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw InvalidArgs("cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw InvalidArgs("cannot write " + out_path);
        out << text;
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

struct CommonFlags {
    uint64_t budget = 100'000'000;
    int threads = 1;  // accepted for interface stability; outputs are
                      // identical for any value
    uint64_t seed = 0x5eed;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--budget", flags.budget, "search node budget");
    cmd->add_option("--threads", flags.threads, "worker threads (results are identical for any value)");
    cmd->add_option("--seed", flags.seed, "seed for sampled verification");
    cmd->add_option("--format", flags.format, "json|csv|dot")->check(CLI::IsMember({"json", "csv", "dot"}));
    cmd->add_option("--out", flags.out, "write the artifact to a file instead of stdout");
}

int exit_for_search(const SearchReport& report) {
    return report.status == SearchReport::Status::BudgetExceeded ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"function-correcting partition code toolkit"};
    app.require_subcommand(1);

    // ---- partition ----
    auto* partition_cmd = app.add_subcommand("partition", "construct a partition artifact");
    CommonFlags partition_flags;
    int part_q = 2, part_k = 4, part_T = 1;
    std::string part_kind = "weight", part_J, part_basis_file, class_size;
    partition_cmd->add_option("--q", part_q, "field size");
    partition_cmd->add_option("--k", part_k, "dimension");
    partition_cmd->add_option("--kind", part_kind, "weight|hwdf|support|coordinate|coset|finest");
    partition_cmd->add_option("--T", part_T, "interval width for --kind hwdf");
    partition_cmd->add_option("--J", part_J, "comma-separated coordinate set for --kind coordinate");
    partition_cmd->add_option("--basis", part_basis_file, "JSON file with subspace basis rows for --kind coset");
    partition_cmd->add_option("--function-class-size", class_size,
                              "H,E: print the exact count H!/(H-E)! of functions sharing one E-block partition");
    add_common(partition_cmd, partition_flags);

    // ---- join ----
    auto* join_cmd = app.add_subcommand("join", "coarsest common refinement of two partitions");
    CommonFlags join_flags;
    std::string join_a, join_b;
    join_cmd->add_option("--a", join_a, "first partition JSON")->required();
    join_cmd->add_option("--b", join_b, "second partition JSON")->required();
    add_common(join_cmd, join_flags);

    // ---- pdm / pdrm ----
    auto* pdm_cmd = app.add_subcommand("pdm", "partition distance matrix");
    CommonFlags pdm_flags;
    std::string pdm_partition;
    int pdm_t = 1;
    pdm_cmd->add_option("--partition", pdm_partition, "partition JSON")->required();
    pdm_cmd->add_option("--t", pdm_t, "error budget t")->required();
    add_common(pdm_cmd, pdm_flags);

    auto* pdrm_cmd = app.add_subcommand("pdrm", "partition distance requirement matrix");
    CommonFlags pdrm_flags;
    std::string pdrm_partition, pdrm_vectors;
    int pdrm_t = 1;
    pdrm_cmd->add_option("--partition", pdrm_partition, "partition JSON")->required();
    pdrm_cmd->add_option("--t", pdrm_t, "error budget t")->required();
    pdrm_cmd->add_option("--vectors", pdrm_vectors,
                         "JSON file with a word list; grouped partitions use the weight ladder, "
                         "explicit ones default to the whole space");
    add_common(pdrm_cmd, pdrm_flags);

    // ---- clique ----
    auto* clique_cmd = app.add_subcommand("clique", "full-size clique construction or search");
    CommonFlags clique_flags;
    std::string clique_partition;
    clique_cmd->add_option("--partition", clique_partition, "partition JSON")->required();
    add_common(clique_cmd, clique_flags);

    // ---- contraction ----
    auto* contraction_cmd = app.add_subcommand("contraction", "build or verify block-preserving contractions");
    CommonFlags contraction_flags;
    std::string contraction_partition, contraction_make = "", contraction_verify_file, contraction_J;
    contraction_cmd->add_option("--partition", contraction_partition, "partition JSON")->required();
    contraction_cmd->add_option("--make", contraction_make, "weight|mask|clique");
    contraction_cmd->add_option("--J", contraction_J, "comma-separated kept coordinates for --make mask");
    contraction_cmd->add_option("--verify", contraction_verify_file, "contraction JSON to verify");
    add_common(contraction_cmd, contraction_flags);

    // ---- dcode ----
    auto* dcode_cmd = app.add_subcommand("dcode", "exact minimal-length irregular-distance code search");
    CommonFlags dcode_flags;
    std::string dcode_matrix;
    int dcode_q = 2, dcode_rmax = 32, dcode_m = 0, dcode_d = 0;
    dcode_cmd->add_option("--matrix", dcode_matrix, "requirement matrix JSON");
    dcode_cmd->add_option("--q", dcode_q, "field size");
    dcode_cmd->add_option("--r-max", dcode_rmax, "largest length to try");
    dcode_cmd->add_option("--m", dcode_m, "classical mode: number of words");
    dcode_cmd->add_option("--d", dcode_d, "classical mode: constant required distance");
    add_common(dcode_cmd, dcode_flags);

    // ---- bounds ----
    auto* bounds_cmd = app.add_subcommand("bounds", "redundancy bounds with provenance");
    CommonFlags bounds_flags;
    std::string bounds_partition, bounds_individual;
    int bounds_t = 1, bounds_n_full = 0;
    bool bounds_search_upper = false;
    bounds_cmd->add_option("--partition", bounds_partition, "partition JSON (weight/support kinds)");
    bounds_cmd->add_option("--t", bounds_t, "error budget t")->required();
    bounds_cmd->add_option("--individual", bounds_individual, "comma-separated per-partition redundancies (join bounds)");
    bounds_cmd->add_option("--n-full", bounds_n_full, "externally supplied N(q^k, 2t+1)");
    bounds_cmd->add_flag("--search-upper", bounds_search_upper, "also search the classical upper bound");
    bounds_cmd->add_option("--k", part_k, "dimension (join bounds)");
    add_common(bounds_cmd, bounds_flags);

    // ---- gains ----
    auto* gains_cmd = app.add_subcommand("gains", "partition redundancy and rate gains");
    CommonFlags gains_flags;
    std::string gains_individual;
    int gains_r = 0, gains_k = 0;
    gains_cmd->add_option("--individual", gains_individual, "comma-separated per-partition redundancies")->required();
    gains_cmd->add_option("--r", gains_r, "achieved joint redundancy")->required();
    gains_cmd->add_option("--k", gains_k, "message length")->required();
    add_common(gains_cmd, gains_flags);

    // ---- encode / verify / decode ----
    auto* encode_cmd = app.add_subcommand("encode", "synthesize an optimal encoding with a certificate");
    CommonFlags encode_flags;
    std::string encode_partition, encode_strategy = "auto";
    int encode_t = 1;
    encode_cmd->add_option("--partition", encode_partition, "partition JSON")->required();
    encode_cmd->add_option("--t", encode_t, "error budget t")->required();
    encode_cmd->add_option("--strategy", encode_strategy, "auto|clique|contraction|full")
        ->check(CLI::IsMember({"auto", "clique", "contraction", "full"}));
    add_common(encode_cmd, encode_flags);

    auto* verify_cmd = app.add_subcommand("verify", "verify an encoding against a partition");
    CommonFlags verify_flags;
    std::string verify_partition, verify_encoding_file;
    int verify_t = 1;
    verify_cmd->add_option("--partition", verify_partition, "partition JSON")->required();
    verify_cmd->add_option("--t", verify_t, "error budget t")->required();
    verify_cmd->add_option("--encoding", verify_encoding_file, "encoding JSON")->required();
    add_common(verify_cmd, verify_flags);

    auto* decode_cmd = app.add_subcommand("decode", "nearest-codeword decoding");
    CommonFlags decode_flags;
    std::string decode_encoding_file, decode_y;
    int decode_t = 1;
    decode_cmd->add_option("--encoding", decode_encoding_file, "encoding JSON")->required();
    decode_cmd->add_option("--y", decode_y, "received word as a symbol string of length k+r")->required();
    decode_cmd->add_option("--t", decode_t, "error budget t");
    add_common(decode_cmd, decode_flags);

    // ---- locally-bounded ----
    auto* lb_cmd = app.add_subcommand("locally-bounded", "test the locally (rho,lambda)-bounded property");
    CommonFlags lb_flags;
    std::string lb_partition;
    int lb_rho = 2, lb_lambda = 2;
    lb_cmd->add_option("--partition", lb_partition, "partition JSON")->required();
    lb_cmd->add_option("--rho", lb_rho, "ball radius")->required();
    lb_cmd->add_option("--lambda", lb_lambda, "block budget per ball")->required();
    add_common(lb_cmd, lb_flags);

    // ---- example ----
    auto* example_cmd = app.add_subcommand("example", "re-derive a bundled reference case and diff its goldens");
    CommonFlags example_flags;
    std::string example_id;
    bool example_all = false;
    example_cmd->add_option("id", example_id, "case id, e.g. ex10-weight");
    example_cmd->add_flag("--all", example_all, "run the whole suite");
    add_common(example_cmd, example_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 64;
    }

    try {
        if (partition_cmd->parsed()) {
            if (!class_size.empty()) {
                const std::vector<int> he = parse_int_list(class_size);
                if (he.size() != 2) throw InvalidArgs("--function-class-size expects H,E");
                emit(Json{{"function_class_size", function_class_size(he[0], he[1])}}, partition_flags.out);
                return 0;
            }
            Field field(part_q);
            std::optional<PartitionSpec> spec;
            if (part_kind == "weight")
                spec = PartitionSpec::grouped_weight(field, weight_partition(part_k));
            else if (part_kind == "hwdf")
                spec = PartitionSpec::grouped_weight(field, hwdf_partition(part_k, part_T));
            else if (part_kind == "support")
                spec = PartitionSpec::support(Space(field, part_k));
            else if (part_kind == "coordinate")
                spec = PartitionSpec::coordinate(Space(field, part_k), parse_int_list(part_J));
            else if (part_kind == "coset")
                spec = PartitionSpec::coset(Subspace(
                    Space(field, part_k), read_json_file(part_basis_file).get<std::vector<std::vector<int>>>()));
            else if (part_kind == "finest")
                spec = PartitionSpec::explicit_partition(
                    from_function(Space(field, part_k), [](WordRank u) { return int64_t(u); }));
            else
                throw InvalidArgs("unknown partition kind: " + part_kind);
            emit(partition_to_json(*spec), partition_flags.out);
            return 0;
        }

        if (join_cmd->parsed()) {
            const PartitionSpec a = partition_from_json(read_json_file(join_a));
            const PartitionSpec b = partition_from_json(read_json_file(join_b));
            if (a.kind() == PartitionSpec::Kind::GroupedWeight && b.kind() == PartitionSpec::Kind::GroupedWeight) {
                const GroupedWeightPartition joined = join_grouped(a.grouped_form(), b.grouped_form());
                emit(partition_to_json(PartitionSpec::grouped_weight(a.space().field(), joined)), join_flags.out);
            } else {
                const ExplicitPartition joined = join(a.materialized(), b.materialized());
                emit(partition_to_json(PartitionSpec::explicit_partition(joined)), join_flags.out);
            }
            return 0;
        }

        if (pdm_cmd->parsed()) {
            const PartitionSpec p = partition_from_json(read_json_file(pdm_partition));
            const DistanceMatrix m = pdm(p.materialized(), pdm_t);
            if (pdm_flags.format == "csv")
                emit_text(matrix_to_csv(m), pdm_flags.out);
            else
                emit(matrix_to_json(m), pdm_flags.out);
            return 0;
        }

        if (pdrm_cmd->parsed()) {
            const PartitionSpec p = partition_from_json(read_json_file(pdrm_partition));
            std::optional<DistanceMatrix> m;
            if (p.kind() == PartitionSpec::Kind::GroupedWeight) {
                m = pdrm_grouped(p.grouped_form(), pdrm_t);
            } else if (!pdrm_vectors.empty()) {
                std::vector<WordRank> vectors;
                for (const Json& w : read_json_file(pdrm_vectors)) vectors.push_back(word_from_json(p.space(), w));
                m = pdrm(p.materialized(), pdrm_t, vectors);
            } else {
                std::vector<WordRank> all(p.space().size());
                for (WordRank u = 0; u < all.size(); ++u) all[u] = u;
                m = pdrm(p.materialized(), pdrm_t, all);
            }
            if (pdrm_flags.format == "csv")
                emit_text(matrix_to_csv(*m), pdrm_flags.out);
            else
                emit(matrix_to_json(*m), pdrm_flags.out);
            return 0;
        }

        if (clique_cmd->parsed()) {
            const PartitionSpec p = partition_from_json(read_json_file(clique_partition));
            if (clique_flags.format == "dot") {
                emit_text(PartitionGraph(p.materialized()).to_dot(), clique_flags.out);
                return 0;
            }
            std::optional<Clique> clique;
            std::string source;
            if (p.kind() == PartitionSpec::Kind::Support) {
                clique = support_clique(p.space().field(), p.space().k(), 1);
                source = "support construction";
            } else if (p.kind() == PartitionSpec::Kind::Coset || p.kind() == PartitionSpec::Kind::Coordinate) {
                Subspace v = p.kind() == PartitionSpec::Kind::Coset
                                 ? p.coset_subspace()
                                 : [&] {
                                       std::vector<std::vector<int>> rows;
                                       for (int j : p.coordinate_set()) {
                                           std::vector<int> row(p.space().k(), 0);
                                           row[j - 1] = 1;
                                           rows.push_back(std::move(row));
                                       }
                                       return kernel_of_linear(p.space(), rows);
                                   }();
                clique = coset_clique(v);
                source = clique ? "coset construction" : "";
                if (!clique) {
                    emit(Json{{"status", "condition-fails"}}, clique_flags.out);
                    return 0;
                }
            } else if (p.kind() == PartitionSpec::Kind::GroupedWeight) {
                const auto& groups = p.grouped_form().groups();
                const bool singletons =
                    std::all_of(groups.begin(), groups.end(), [](const auto& s) { return s.size() == 1; });
                if (singletons) {
                    clique = weight_clique(p.space().field(), p.space().k(), 1);
                    source = "weight-ladder construction";
                }
            }
            if (!clique) {
                const CliqueSearchResult found =
                    find_full_clique(p.materialized(), CliqueSearchOptions{16, clique_flags.budget});
                if (found.status == CliqueSearchResult::Status::BudgetExceeded) {
                    emit(Json{{"status", "budget-exceeded"}, {"nodes_expanded", found.nodes_expanded}},
                         clique_flags.out);
                    return 2;
                }
                if (found.status == CliqueSearchResult::Status::NotFound) {
                    emit(Json{{"status", "not-found"}, {"nodes_expanded", found.nodes_expanded}}, clique_flags.out);
                    return 0;
                }
                clique = found.clique;
                source = "exhaustive search";
            }
            Json j = clique_to_json(*clique);
            j["status"] = "found";
            j["source"] = source;
            emit(j, clique_flags.out);
            return 0;
        }

        if (contraction_cmd->parsed()) {
            const PartitionSpec p = partition_from_json(read_json_file(contraction_partition));
            if (!contraction_verify_file.empty()) {
                const Contraction c = contraction_from_json(read_json_file(contraction_verify_file));
                ContractionCheckOptions options;
                options.seed = contraction_flags.seed;
                const ContractionCheck check =
                    p.kind() == PartitionSpec::Kind::GroupedWeight
                        ? verify_contraction(p.grouped_form(), p.space().field(), c, options)
                        : verify_contraction(p.materialized(), c, options);
                Json j{{"ok", check.ok},
                       {"mode", check.exhaustive ? "exhaustive" : "sampled"},
                       {"pairs_checked", check.pairs_checked}};
                if (check.counterexample)
                    j["counterexample"] = {word_to_json(p.space(), check.counterexample->first),
                                           word_to_json(p.space(), check.counterexample->second)};
                emit(j, contraction_flags.out);
                return check.ok ? 0 : 1;
            }
            std::optional<Contraction> c;
            if (contraction_make == "weight") {
                c = weight_contraction(p.space().field(), p.space().k());
            } else if (contraction_make == "mask") {
                if (p.kind() != PartitionSpec::Kind::Coset)
                    throw InvalidArgs("--make mask needs a coset partition");
                c = coset_contraction(p.coset_subspace(), parse_int_list(contraction_J));
                if (!c) {
                    emit(Json{{"status", "condition-fails"}}, contraction_flags.out);
                    return 0;
                }
            } else if (contraction_make == "clique") {
                const CliqueSearchResult found =
                    find_full_clique(p.materialized(), CliqueSearchOptions{16, contraction_flags.budget});
                if (found.status != CliqueSearchResult::Status::Found)
                    throw InvalidArgs("no full-size clique to contract onto");
                c = clique_to_contraction(p.materialized(), *found.clique);
            } else {
                throw InvalidArgs("--make expects weight, mask or clique (or use --verify)");
            }
            emit(contraction_to_json(*c), contraction_flags.out);
            return 0;
        }

        if (dcode_cmd->parsed()) {
            const Field field(dcode_q);
            SearchReport report;
            if (dcode_m > 0) {
                report = n_classical(dcode_m, dcode_d, field, DCodeSearchOptions{dcode_rmax, dcode_flags.budget});
            } else {
                if (dcode_matrix.empty()) throw InvalidArgs("need --matrix or --m/--d");
                const DistanceMatrix m = matrix_from_json(read_json_file(dcode_matrix));
                report = min_dcode(m, field, DCodeSearchOptions{dcode_rmax, dcode_flags.budget});
            }
            emit(search_report_to_json(report), dcode_flags.out);
            return exit_for_search(report);
        }

        if (bounds_cmd->parsed()) {
            if (!bounds_individual.empty()) {
                const std::vector<int> individual = parse_int_list(bounds_individual);
                const BoundReport report =
                    join_bounds(individual, part_k, bounds_t,
                                bounds_n_full > 0 ? std::optional<int>(bounds_n_full) : std::nullopt);
                emit(bound_report_to_json(report), bounds_flags.out);
                return 0;
            }
            const PartitionSpec p = partition_from_json(read_json_file(bounds_partition));
            std::optional<DCodeSearchOptions> search;
            if (bounds_search_upper) search = DCodeSearchOptions{32, bounds_flags.budget};
            std::optional<BoundReport> report;
            if (p.kind() == PartitionSpec::Kind::Support) {
                report = support_bounds(p.space().k(), bounds_t, p.space().field(), search);
            } else if (p.kind() == PartitionSpec::Kind::GroupedWeight) {
                const auto& groups = p.grouped_form().groups();
                const bool singletons =
                    std::all_of(groups.begin(), groups.end(), [](const auto& s) { return s.size() == 1; });
                if (!singletons) throw InvalidArgs("closed-form bounds cover the weight partition; use encode");
                report = weight_bounds(p.space().k(), bounds_t, p.space().field(), search);
            } else {
                throw InvalidArgs("closed-form bounds cover weight and support partitions");
            }
            emit(bound_report_to_json(*report), bounds_flags.out);
            return 0;
        }

        if (gains_cmd->parsed()) {
            const PartitionGains g = partition_gains(parse_int_list(gains_individual), gains_r, gains_k);
            emit(gains_to_json(g), gains_flags.out);
            return 0;
        }

        if (encode_cmd->parsed()) {
            const PartitionSpec p = partition_from_json(read_json_file(encode_partition));
            const RedundancyStrategy strategy = encode_strategy == "clique"        ? RedundancyStrategy::CliqueOnly
                                                : encode_strategy == "contraction" ? RedundancyStrategy::ContractionOnly
                                                : encode_strategy == "full"        ? RedundancyStrategy::FullPDRM
                                                                                   : RedundancyStrategy::Auto;
            RedundancyOptions options;
            options.search = DCodeSearchOptions{32, encode_flags.budget};
            const RedundancyResult result = optimal_redundancy(p, encode_t, strategy, options);
            Json j{{"certificate", certificate_to_json(result.certificate)},
                   {"search", search_report_to_json(result.search)}};
            if (result.encoding) j["encoding"] = encoding_to_json(*result.encoding);
            emit(j, encode_flags.out);
            return exit_for_search(result.search);
        }

        if (verify_cmd->parsed()) {
            const PartitionSpec p = partition_from_json(read_json_file(verify_partition));
            const Encoding enc = encoding_from_json(read_json_file(verify_encoding_file));
            const EncodingCheck check = p.kind() == PartitionSpec::Kind::GroupedWeight
                                            ? verify_encoding(p.grouped_form(), verify_t, enc)
                                            : verify_encoding(p.materialized(), verify_t, enc);
            Json j{{"ok", check.ok}, {"pairs_checked", check.pairs_checked}};
            if (check.counterexample)
                j["counterexample"] = {word_to_json(p.space(), check.counterexample->first),
                                       word_to_json(p.space(), check.counterexample->second)};
            emit(j, verify_flags.out);
            return check.ok ? 0 : 1;
        }

        if (decode_cmd->parsed()) {
            const Encoding enc = encoding_from_json(read_json_file(decode_encoding_file));
            Space long_space(enc.space().field(), enc.space().k() + enc.r());
            const std::vector<int> received = long_space.digits_of(long_space.parse_word(decode_y));
            const DecodeResult result = decode(enc, received, decode_t);
            emit(Json{{"block", result.block},
                      {"nearest_message", word_to_json(enc.space(), result.nearest_message)},
                      {"distance", result.distance}},
                 decode_flags.out);
            return 0;
        }

        if (lb_cmd->parsed()) {
            const PartitionSpec p = partition_from_json(read_json_file(lb_partition));
            const bool bounded = is_locally_bounded(p.materialized(), lb_rho, lb_lambda);
            emit(Json{{"locally_bounded", bounded}, {"rho", lb_rho}, {"lambda", lb_lambda}}, lb_flags.out);
            return 0;
        }

        if (example_cmd->parsed()) {
            std::vector<CaseResult> results;
            if (example_all) {
                results = run_all_examples(example_flags.budget);
            } else {
                if (example_id.empty()) throw InvalidArgs("give a case id or --all");
                results.push_back(find_case(example_id).run(example_flags.budget));
            }
            bool any_fail = false, any_budget = false;
            Json summary = Json::array();
            for (const CaseResult& r : results) {
                const char* status = r.status == CaseResult::Status::Pass            ? "PASS"
                                     : r.status == CaseResult::Status::BudgetExceeded ? "BUDGET-EXCEEDED"
                                                                                      : "FAIL";
                std::cerr << status << " " << r.id << " (" << r.milliseconds << " ms, " << r.nodes_used
                          << " nodes)" << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
                summary.push_back(Json{{"id", r.id},
                                       {"status", status},
                                       {"milliseconds", r.milliseconds},
                                       {"nodes_used", r.nodes_used},
                                       {"detail", r.detail},
                                       {"artifacts", r.artifacts}});
                any_fail = any_fail || r.status == CaseResult::Status::Fail;
                any_budget = any_budget || r.status == CaseResult::Status::BudgetExceeded;
            }
            emit(summary, example_flags.out);
            if (any_fail) return 1;
            if (any_budget) return 2;
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
