#pragma once

#include <string>

#include <json.hpp>

#include "liepair/homotopy.hpp"
#include "liepair/zoo.hpp"

namespace liepair {

using Json = nlohmann::ordered_json;

/// Malformed input: bad JSON syntax or a value of the wrong type/shape. The
/// message carries the byte offset or the JSON pointer of the offending value.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const GaussScalar& s);
Json to_json(const Matrix& m);
/// Sparse: only nonzero coefficients, as {"form": [i…], "slots": [β…], "value": v, "coeff": "…"}.
Json to_json(const Cochain& c);
Json to_json(const Violation& v);
/// At most `limit` violations are listed; the total is always given.
Json to_json(const CheckReport& r, std::size_t limit = 20);

GaussScalar scalar_from_json(const Json& j, const std::string& where);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

/// Fixture file:
///   {"name", "dim", "dim_g", "bracket": [[i, j, [c…]]…],
///    "modules": {name: {"dim", "action": [matrix per 𝔤 basis vector]}},
///    "connection": {name: {"module": M, "nabla": [matrix per 𝔡 basis vector]}},
///    "algebra": {name: {"dim", "action": […], "mult": [[i, j, [c…]]…]}}}
/// Omitted bracket or product entries are zero; brackets are completed
/// antisymmetrically. A connection given as a bare matrix list belongs to the
/// module with the same name.
Json fixture_to_json(const Fixture& f);
/// Throws ParseError for schema problems and ValidationError when 𝔤 is not a
/// subalgebra. Jacobi, flatness and the algebra axioms are left to validate().
Fixture fixture_from_json(const Json& j);
/// Parses text; syntax errors become ParseError with the byte position.
Json parse_json(const std::string& text);

/// Every structural validator on a loaded fixture.
std::vector<CheckReport> validate_fixture(const Fixture& f);

}  // namespace liepair
