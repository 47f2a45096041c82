#ifndef NHTOPO_IO_HPP
#define NHTOPO_IO_HPP

#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "nhtopo/complex.hpp"

namespace nhtopo {

/**
 * Parses a complex document. Text form:
 *
 *     # comment
 *     ground: a b c        (optional; inferred from the facets when absent)
 *     facet: a b
 *     facet:               (an empty facet line is the empty simplex)
 *
 * A lone `void` line (or a document with no facet lines) is the void complex.
 * A document whose first non-space character is `{` is parsed as JSON:
 * {"ground": [...], "facets": [[...], ...], "void": false}.
 * Throws ParseError (with line number) or GroundViolation.
 */
SimplicialComplex parse_complex(std::string_view text);

/// Inverse of parse_complex; deterministic, parse(serialize(K)) == K.
std::string serialize_complex(const SimplicialComplex& k);

nlohmann::json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const nlohmann::json& j);

} // namespace nhtopo

#endif // NHTOPO_IO_HPP
