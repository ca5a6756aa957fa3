#pragma once

#include "cupn/chain.hpp"
#include "cupn/complex.hpp"
#include "cupn/error.hpp"
#include "cupn/ring.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace cupn::io {

/// Malformed document: bad JSON, missing keys, wrong types.
class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

using Json = nlohmann::json;

/// Reads and parses a UTF-8 JSON document. Throws ParseError.
Json read_json_file(const std::filesystem::path& path);

/// {"maximal_simplices": [[0,1,2], ...]}; every list strictly increasing.
SimplicialComplex complex_from_json(const Json& doc);
Json complex_to_json(const SimplicialComplex& K);

/// "ring": "Z" | "Zmod" (with "modulus": M) | "Z2".
Ring ring_from_json(const Json& doc);
void ring_to_json(const Ring& ring, Json& doc);

/// {"degree": p, "ring": ..., "support": [{"simplex": [...], "coeff": k}, ...]}.
/// Coefficients are integers or decimal strings and are reduced into the ring.
Cochain cochain_from_json(const Json& doc);
Json cochain_to_json(const Cochain& c);

/// {"ring": ..., "terms": [{"simplex": [...], "coeff": k}, ...]}.
FormalSum formal_sum_from_json(const Json& doc);
Json formal_sum_to_json(const FormalSum& s);

/// Integers that fit in 64 bits become JSON numbers, others decimal strings.
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& v);

/// One line per term: "<coeff>  [v_0,...,v_m]".
std::string format_terms(const FormalSum& s);

}  // namespace cupn::io
