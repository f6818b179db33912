#ifndef FCPC_JSON_IO_HPP
#define FCPC_JSON_IO_HPP

#include <json.hpp>

#include "fcpc/bounds.hpp"
#include "fcpc/codec.hpp"

namespace fcpc {

using Json = nlohmann::json;

// Field: {"q":4,"modulus":[1,1,1]}; the modulus key is omitted for prime q.
Json field_to_json(const Field& field);
Field field_from_json(const Json& j);

// Words serialize as digit arrays [0,1,1,0] or {"encoding":"rank","value":6}.
Json word_to_json(const Space& space, WordRank u);
WordRank word_from_json(const Space& space, const Json& j);

// Partitions: {"q":2,"k":4,"kind":"explicit","block_of":[...]},
// {"kind":"grouped-weight","k":35,"groups":[[...],...]},
// {"kind":"coset","basis":[[...],...]}, {"kind":"coordinate","J":[2,3]},
// {"kind":"support"}; rule kinds materialize on demand.
Json partition_to_json(const PartitionSpec& partition);
PartitionSpec partition_from_json(const Json& j);

// Matrices: {"n":4,"t":2,"entries":[[...],...]}.
Json matrix_to_json(const DistanceMatrix& m);
DistanceMatrix matrix_from_json(const Json& j);
std::string matrix_to_csv(const DistanceMatrix& m);

// Cliques: {"size":4,"vertices":[[...],...]} plus the ambient q and k.
Json clique_to_json(const Clique& clique);
Clique clique_from_json(const Json& j);

// Contractions: {"U":[...ranks...],"phi":{"kind":"dense","map":[...]}} or
// rule-based phi ({"kind":"weight"} / {"kind":"mask","J":[1,2,3]}).
Json contraction_to_json(const Contraction& c);
Contraction contraction_from_json(const Json& j);

// D-codes and search reports.
Json dcode_to_json(const DCode& code);
DCode dcode_from_json(const Json& j);
Json search_report_to_json(const SearchReport& report);

// Encodings: {"t":2,"r":6,"rule":{"kind":"per-block","assignments":...}}
// with the partition embedded so decode is self-contained.
Json encoding_to_json(const Encoding& enc);
Encoding encoding_from_json(const Json& j);

Json bound_report_to_json(const BoundReport& report);
Json gains_to_json(const PartitionGains& gains);
Json certificate_to_json(const OptimalityCertificate& cert);

}  // namespace fcpc

#endif
