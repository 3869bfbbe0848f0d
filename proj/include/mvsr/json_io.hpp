#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "mvsr/matrix.hpp"
#include "mvsr/mv_algebra.hpp"
#include "mvsr/semimodule.hpp"
#include "mvsr/semiring.hpp"

namespace mvsr {

/// std::map-backed, so objects serialize with sorted keys.
using Json = nlohmann::json;

/// Parses text; ParseError messages carry the byte offset.
Json parse_json_text(const std::string& text, const std::string& source = "input");
Json read_json_file(const std::string& path);
/// Two-space indentation and a trailing newline.
std::string dump_json(const Json& j);

Json to_json(const FiniteSemiring& s);
Json to_json(const MvAlgebra& a);
/// Scalars are embedded as a full semiring object.
Json to_json(const FiniteSemimodule& m);
Json to_json(const SemiringMatrix& u);

/// Decoders throw ParseError naming the JSON pointer of the offending value,
/// and MalformedTable for tables of the wrong shape or range.
FiniteSemiring semiring_from_json(const Json& j);
MvAlgebra mv_from_json(const Json& j);
/// "scalars" is a semiring object or a reference: "boolean", "trivial",
/// "L<k>" (vee-odot reduct of the k-element chain) or "L<k>:wedge_oplus".
FiniteSemimodule semimodule_from_json(const Json& j);
SemiringMatrix matrix_from_json(const Json& j);
SemiringPtr scalars_from_json(const Json& j, const std::string& path = "/scalars");

using Algebra = std::variant<FiniteSemiring, MvAlgebra, FiniteSemimodule, SemiringMatrix>;
/// Dispatches on "kind".
Algebra algebra_from_json(const Json& j);

}  // namespace mvsr
