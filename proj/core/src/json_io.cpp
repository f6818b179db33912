#include "fcpc/json_io.hpp"

#include <sstream>

namespace fcpc {

namespace {

Json digits_json(const std::vector<int>& digits) { return Json(digits); }

std::vector<int> digits_from_json(const Json& j) {
    if (!j.is_array()) throw BadFormat("expected a digit array");
    return j.get<std::vector<int>>();
}

std::string word_string_of(const Field& field, const std::vector<int>& digits) {
    std::string out;
    for (int d : digits) out += field.symbol_name(d);
    return out;
}

std::vector<int> word_digits_from_string(const Field& field, const std::string& text, int expected_len) {
    Space line(field, expected_len == 0 ? 1 : expected_len);
    if (expected_len == 0) {
        if (!text.empty()) throw BadFormat("expected the empty word");
        return {};
    }
    return line.digits_of(line.parse_word(text));
}

}  // namespace

Json field_to_json(const Field& field) {
    Json j{{"q", field.q()}};
    if (field.degree() > 1) j["modulus"] = field.modulus();
    return j;
}

Field field_from_json(const Json& j) {
    if (!j.contains("q")) throw BadFormat("field needs a q");
    Field field(j.at("q").get<int>());
    if (j.contains("modulus") && field.modulus() != j.at("modulus").get<std::vector<int>>())
        throw BadFormat("modulus differs from the fixed table for this q");
    return field;
}

Json word_to_json(const Space& space, WordRank u) { return digits_json(space.digits_of(u)); }

WordRank word_from_json(const Space& space, const Json& j) {
    if (j.is_object()) {
        if (j.value("encoding", "") != "rank") throw BadFormat("unknown word encoding");
        const uint64_t rank = j.at("value").get<uint64_t>();
        if (rank >= space.size()) throw BadFormat("rank outside the space");
        return rank;
    }
    return space.rank_of(digits_from_json(j));
}

Json partition_to_json(const PartitionSpec& partition) {
    Json j;
    j["kind"] = partition.kind_name();
    j["q"] = partition.space().q();
    j["k"] = partition.space().k();
    if (partition.space().field().degree() > 1) j["modulus"] = partition.space().field().modulus();
    switch (partition.kind()) {
        case PartitionSpec::Kind::Explicit:
            j["block_of"] = partition.explicit_form().labels();
            break;
        case PartitionSpec::Kind::GroupedWeight:
            j["groups"] = partition.grouped_form().groups();
            break;
        case PartitionSpec::Kind::Coset:
            j["basis"] = partition.coset_subspace().basis();
            break;
        case PartitionSpec::Kind::Coordinate:
            j["J"] = partition.coordinate_set();
            break;
        case PartitionSpec::Kind::Support:
            break;
    }
    return j;
}

PartitionSpec partition_from_json(const Json& j) {
    const std::string kind = j.value("kind", "explicit");
    Field field(j.value("q", 2));
    if (kind == "grouped-weight") {
        const int k = j.at("k").get<int>();
        return PartitionSpec::grouped_weight(field,
                                             grouped(k, j.at("groups").get<std::vector<std::vector<int>>>()));
    }
    const int k = j.at("k").get<int>();
    Space space(field, k);
    if (kind == "explicit")
        return PartitionSpec::explicit_partition(
            ExplicitPartition(space, j.at("block_of").get<std::vector<int32_t>>()));
    if (kind == "coset")
        return PartitionSpec::coset(Subspace(space, j.at("basis").get<std::vector<std::vector<int>>>()));
    if (kind == "coordinate") return PartitionSpec::coordinate(space, j.at("J").get<std::vector<int>>());
    if (kind == "support") return PartitionSpec::support(space);
    throw BadFormat("unknown partition kind: " + kind);
}

Json matrix_to_json(const DistanceMatrix& m) {
    std::vector<std::vector<int>> rows(m.n(), std::vector<int>(m.n()));
    for (int i = 0; i < m.n(); ++i) {
        for (int j = 0; j < m.n(); ++j) rows[i][j] = m.at(i, j);
    }
    return Json{{"n", m.n()}, {"t", m.t()}, {"role", m.role_name()}, {"entries", rows}};
}

DistanceMatrix matrix_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    const int t = j.value("t", 1);
    const std::string role = j.value("role", "generic");
    DistanceMatrix m(n, t,
                     role == "pdm"    ? DistanceMatrix::Role::PDM
                     : role == "pdrm" ? DistanceMatrix::Role::PDRM
                                      : DistanceMatrix::Role::Generic);
    const auto rows = j.at("entries").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(rows.size()) != n) throw BadFormat("entry rows do not match n");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw BadFormat("entry columns do not match n");
        for (int c = i + 1; c < n; ++c) {
            if (rows[i][c] != rows[c][i]) throw BadFormat("matrix must be symmetric");
            m.set(i, c, rows[i][c]);
        }
        if (rows[i][i] != 0) throw BadFormat("diagonal must be zero");
    }
    return m;
}

std::string matrix_to_csv(const DistanceMatrix& m) {
    std::ostringstream out;
    for (int i = 0; i < m.n(); ++i) {
        for (int j = 0; j < m.n(); ++j) {
            if (j) out << ',';
            out << m.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

Json clique_to_json(const Clique& clique) {
    Json vertices = Json::array();
    for (WordRank u : clique.vertices) vertices.push_back(word_to_json(clique.space, u));
    return Json{{"q", clique.space.q()}, {"k", clique.space.k()}, {"size", clique.size()}, {"vertices", vertices}};
}

Clique clique_from_json(const Json& j) {
    Space space(Field(j.at("q").get<int>()), j.at("k").get<int>());
    std::vector<WordRank> vertices;
    for (const Json& w : j.at("vertices")) vertices.push_back(word_from_json(space, w));
    std::sort(vertices.begin(), vertices.end());
    return Clique{space, std::move(vertices)};
}

Json contraction_to_json(const Contraction& c) {
    Json j{{"q", c.space().q()}, {"k", c.space().k()}};
    Json phi;
    switch (c.phi_kind()) {
        case Contraction::PhiKind::Dense: {
            phi["kind"] = "dense";
            std::vector<uint64_t> map(c.space().size());
            for (WordRank u = 0; u < c.space().size(); ++u) map[u] = c.apply(u);
            phi["map"] = map;
            break;
        }
        case Contraction::PhiKind::Weight:
            phi["kind"] = "weight";
            break;
        case Contraction::PhiKind::Mask:
            phi["kind"] = "mask";
            phi["J"] = c.mask_set();
            break;
    }
    j["phi"] = phi;
    if (c.phi_kind() == Contraction::PhiKind::Dense) j["U"] = c.image();
    return j;
}

Contraction contraction_from_json(const Json& j) {
    Space space(Field(j.at("q").get<int>()), j.at("k").get<int>());
    const Json& phi = j.at("phi");
    const std::string kind = phi.at("kind").get<std::string>();
    if (kind == "weight") return Contraction::weight_rule(space);
    if (kind == "mask") return Contraction::mask_rule(space, phi.at("J").get<std::vector<int>>());
    if (kind != "dense") throw BadFormat("unknown phi kind: " + kind);

    const auto image = j.at("U").get<std::vector<WordRank>>();
    const auto map = phi.at("map").get<std::vector<WordRank>>();
    if (map.size() != space.size()) throw BadFormat("phi map must cover every rank");
    std::vector<uint32_t> index_of(map.size());
    for (size_t u = 0; u < map.size(); ++u) {
        const auto it = std::find(image.begin(), image.end(), map[u]);
        if (it == image.end()) throw BadFormat("phi maps outside U");
        index_of[u] = static_cast<uint32_t>(it - image.begin());
    }
    return Contraction::dense(space, image, std::move(index_of));
}

Json dcode_to_json(const DCode& code) {
    Json words = Json::array();
    for (const auto& w : code.words) words.push_back(digits_json(w));
    return Json{{"field", field_to_json(code.field)}, {"r", code.r}, {"words", words}};
}

DCode dcode_from_json(const Json& j) {
    DCode code{field_from_json(j.at("field")), j.at("r").get<int>(), {}};
    for (const Json& w : j.at("words")) code.words.push_back(digits_from_json(w));
    return code;
}

Json search_report_to_json(const SearchReport& report) {
    Json j;
    switch (report.status) {
        case SearchReport::Status::Exact: j["status"] = "exact"; break;
        case SearchReport::Status::LowerBoundOnly: j["status"] = "lower-bound-only"; break;
        case SearchReport::Status::BudgetExceeded: j["status"] = "budget-exceeded"; break;
    }
    j["r_min"] = report.r_min;
    j["nodes_expanded"] = report.nodes_expanded;
    j["refutation"] = report.refutation;
    if (report.witness) j["witness"] = dcode_to_json(*report.witness);
    return j;
}

Json encoding_to_json(const Encoding& enc) {
    const Field& field = enc.space().field();
    Json rule;
    auto word_at = [&](uint32_t idx) { return word_string_of(field, enc.redundancy_words()[idx]); };
    switch (enc.rule_kind()) {
        case Encoding::RuleKind::Dense: {
            rule["kind"] = "dense";
            std::vector<std::string> table(enc.space().size());
            for (WordRank u = 0; u < enc.space().size(); ++u) table[u] = word_at(enc.index_table()[u]);
            rule["table"] = table;
            break;
        }
        case Encoding::RuleKind::PerBlock: {
            rule["kind"] = "per-block";
            Json assignments = Json::object();
            for (size_t b = 0; b < enc.index_table().size(); ++b)
                assignments[std::to_string(b)] = word_at(enc.index_table()[b]);
            rule["assignments"] = assignments;
            break;
        }
        case Encoding::RuleKind::PerWeight: {
            rule["kind"] = "per-weight";
            Json assignments = Json::object();
            for (size_t w = 0; w < enc.index_table().size(); ++w)
                assignments[std::to_string(w)] = word_at(enc.index_table()[w]);
            rule["assignments"] = assignments;
            break;
        }
        case Encoding::RuleKind::PerImage: {
            // A weight-rule image round-trips as per-weight; anything else is
            // written densely.
            if (enc.contraction().phi_kind() == Contraction::PhiKind::Weight) {
                // weight-rule image index w holds the ladder word of weight w
                rule["kind"] = "per-weight";
                Json assignments = Json::object();
                for (int w = 0; w <= enc.space().k(); ++w)
                    assignments[std::to_string(w)] = word_at(enc.index_table()[w]);
                rule["assignments"] = assignments;
            } else {
                rule["kind"] = "dense";
                enc.space().require_materializable();
                std::vector<std::string> table(enc.space().size());
                for (WordRank u = 0; u < enc.space().size(); ++u) table[u] = word_at(enc.redundancy_index(u));
                rule["table"] = table;
            }
            break;
        }
    }
    return Json{{"t", enc.t()},
                {"r", enc.r()},
                {"rule", rule},
                {"partition", partition_to_json(enc.partition())}};
}

Encoding encoding_from_json(const Json& j) {
    PartitionSpec partition = partition_from_json(j.at("partition"));
    const int t = j.at("t").get<int>();
    const int r = j.at("r").get<int>();
    const Field& field = partition.space().field();
    const Json& rule = j.at("rule");
    const std::string kind = rule.at("kind").get<std::string>();

    auto parse_assignments = [&](const Json& assignments, size_t expected) {
        std::vector<std::vector<int>> words;
        std::vector<uint32_t> index(expected);
        for (size_t i = 0; i < expected; ++i) {
            const std::string& text = assignments.at(std::to_string(i)).get_ref<const std::string&>();
            std::vector<int> digits = word_digits_from_string(field, text, r);
            auto it = std::find(words.begin(), words.end(), digits);
            if (it == words.end()) {
                words.push_back(std::move(digits));
                it = std::prev(words.end());
            }
            index[i] = static_cast<uint32_t>(it - words.begin());
        }
        return std::pair{std::move(words), std::move(index)};
    };

    if (kind == "dense") {
        const auto table = rule.at("table").get<std::vector<std::string>>();
        std::vector<std::vector<int>> words;
        std::vector<uint32_t> index(table.size());
        for (size_t u = 0; u < table.size(); ++u) {
            std::vector<int> digits = word_digits_from_string(field, table[u], r);
            auto it = std::find(words.begin(), words.end(), digits);
            if (it == words.end()) {
                words.push_back(std::move(digits));
                it = std::prev(words.end());
            }
            index[u] = static_cast<uint32_t>(it - words.begin());
        }
        return Encoding::dense(std::move(partition), t, r, std::move(words), std::move(index));
    }
    if (kind == "per-block") {
        const size_t blocks = partition.materialized().block_count();
        auto [words, index] = parse_assignments(rule.at("assignments"), blocks);
        return Encoding::per_block(std::move(partition), t, r, std::move(words), std::move(index));
    }
    if (kind == "per-weight") {
        auto [words, index] = parse_assignments(rule.at("assignments"), partition.space().k() + 1);
        return Encoding::per_weight(std::move(partition), t, r, std::move(words), std::move(index));
    }
    throw BadFormat("unknown encoding rule kind: " + kind);
}

Json bound_report_to_json(const BoundReport& report) {
    Json j{{"lower", report.lower}, {"lower_provenance", report.lower_provenance}};
    if (report.upper) {
        j["upper"] = *report.upper;
        j["upper_provenance"] = report.upper_provenance;
    }
    if (report.lower_exact)
        j["lower_exact"] = Json{{"num", report.lower_exact->num}, {"den", report.lower_exact->den}};
    return j;
}

Json gains_to_json(const PartitionGains& gains) {
    return Json{{"redundancy_gain", {{"num", gains.redundancy_gain.num}, {"den", gains.redundancy_gain.den}}},
                {"rate_gain", {{"num", gains.rate_gain.num}, {"den", gains.rate_gain.den}}}};
}

Json certificate_to_json(const OptimalityCertificate& cert) {
    const char* method = cert.method == OptimalityCertificate::Method::Clique        ? "clique"
                         : cert.method == OptimalityCertificate::Method::Contraction ? "contraction"
                                                                                     : "full-pdrm";
    return Json{{"r", cert.r},
                {"method", method},
                {"exact", cert.exact},
                {"lower_bound_source", cert.lower_bound_source},
                {"nodes_expanded", cert.nodes_expanded}};
}

}  // namespace fcpc
