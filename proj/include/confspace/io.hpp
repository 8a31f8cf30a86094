#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "confspace/configuration.hpp"
#include "confspace/polynomial.hpp"
#include "confspace/roots.hpp"
#include "confspace/valuation.hpp"

namespace confspace {

using Json = nlohmann::ordered_json;

struct WeightedConfiguration {
  Configuration config;
  Valuation valuation;
};

/// JSON {"vertices": [...], "nubs": [[...]], "weights": {label: "p/q"}} with
/// "independent_sets" accepted in place of "nubs".
WeightedConfiguration parse_config_json(std::string_view text);
/// Lines "vertices: a b c", "nub: a b", "weight: a 1/2"; '#' starts a comment.
WeightedConfiguration parse_config_text(std::string_view text);
/// JSON when the first non-blank character is '{', text otherwise.
/// Errors: ParseError with line or field, ValidationError for a bad configuration.
WeightedConfiguration parse_config(std::string_view text);
/// Reads a file, or standard input for "-".
WeightedConfiguration read_config(const std::string& path);

Json config_to_json(const Configuration& c, const Valuation& f);

/// Coefficients in ascending order as "p/q" strings.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// "p/q" when rational, {"witness": [...], "lo": "...", "hi": "..."} otherwise.
Json root_to_json(const AlgebraicRoot& root);
/// Accepts both forms of root_to_json.
AlgebraicRoot root_from_json(const Json& j);

/// Labels of the members in vertex order.
Json set_to_json(const Configuration& c, VertexSet x);
/// "a,b" in terms of labels; the empty string is the empty set.
VertexSet parse_set(const Configuration& c, std::string_view text);

}  // namespace confspace
