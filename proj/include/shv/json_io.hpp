#pragma once

// JSON serialization of the public data types. All rationals travel as
// "p/q" strings, infinite interval ends as "-inf"/"+inf" sentinels.

#include "shv/circlesheaf.hpp"
#include "shv/linesheaf.hpp"
#include "shv/quiver.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace shv {

using json = nlohmann::json;

// Thrown on malformed input; the CLI maps it to exit code 2.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

Rational rational_from_json(const json& j, const std::string& where);

json to_json(const LineSheaf& s);
json to_json(const CircleSheaf& s);
json to_json(const Covector& c);
json to_json(const LineQuiverRep& r);
json to_json(const CircleQuiverRep& r);

LineSheaf line_sheaf_from_json(const json& j);
CircleSheaf circle_sheaf_from_json(const json& j);
Covector covector_from_json(const json& j);

// Either kind of sheaf, detected by schema ("summands" vs "wrapped"/"local").
std::variant<LineSheaf, CircleSheaf> sheaf_from_json(const json& j);
// Either kind of representation, from {"space": "line"|"circle", ...}.
std::variant<LineQuiverRep, CircleQuiverRep> rep_from_json(const json& j);

}  // namespace shv
