#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "perfekt/casestudy.hpp"
#include "perfekt/certify.hpp"
#include "perfekt/numtheory.hpp"

namespace perfekt {

/// Key order is kept as inserted so output is deterministic.
using Json = nlohmann::ordered_json;

/// Throws InputError with line and column on malformed text.
Json parse_json(std::string_view text);
Json load_json_file(const std::string& path);

// Scalars are always strings in the canonical text format. Integers are JSON
// numbers when they fit in 64 bits and decimal strings otherwise.

Json to_json(const Scalar& x);
Json to_json(const Integer& x);
Json to_json(const Vec& v);
Json to_json(const IntVec& v);
Json to_json(const std::vector<IntVec>& vs);
Json to_json(const SymMatrix& q);
Json to_json(const Cone& k);
Json to_json(const MinResult& r);
Json to_json(const PerfectResult& r);
Json to_json(const RyshkovVertex& v);
Json to_json(const std::vector<RyshkovVertex>& vs);
Json to_json(const TraversalResult& t);
Json to_json(const NeighborResult& r);
Json to_json(const Certificate& c);
Json to_json(const ContinuedFraction& cf);
Json to_json(const std::vector<Convergent>& cs);
Json to_json(const Report& r);
Json to_json(const Sqrt2Figure& f);
Json to_json(const std::vector<EEvidenceItem>& items);

Scalar scalar_from_json(const Json& j);
Integer integer_from_json(const Json& j);
Vec vec_from_json(const Json& j);
IntVec intvec_from_json(const Json& j);
/// {"n": int, "d": optional int, "rows": [[scalar, ...], ...]}; symmetry and
/// the field are validated.
SymMatrix matrix_from_json(const Json& j);
/// {"n", "d"?, "generators", "facets"?, "rationally_generated"?, "tag"?}.
/// Tags "classical", "orthant" and "sqrt2" may omit the generators.
Cone cone_from_json(const Json& j);
MinResult min_result_from_json(const Json& j);
RyshkovVertex vertex_from_json(const Json& j);
std::vector<RyshkovVertex> vertices_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);

}  // namespace perfekt
