#pragma once

// JSON serialization shared by the CLI and the python bindings.
// Conventions: rationals are strings "p/q" (with "/q" omitted when the
// denominator is 1); field elements are power-basis coordinate arrays
// (collapsed to a bare rational over Q); matrices are row-major nested
// arrays of entries.

#include <optional>
#include <string>

#include <json.hpp>

#include "galdesc/descent.hpp"
#include "galdesc/galois.hpp"
#include "galdesc/grouprep.hpp"
#include "galdesc/semilinear.hpp"

namespace galdesc {

using nlohmann::json;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);  // accepts "p/q", "p", or integers

json element_to_json(const FieldElement& x);
FieldElement element_from_json(const json& j, const FieldPtr& field);

json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const json& j, const FieldPtr& field);

json object_to_json(const Obj& x);
Obj object_from_json(const json& j, const MatCategory& cat);

// Extension description { "minpoly": [...], "generators": [[coords],...],
// "names": [...] }.
json extension_to_json(const GaloisExtension& ext);
GaloisExtension extension_from_json(const json& j);

// Group description { "order": n, "table": [[...]], "names": [...],
// "normal": [indices] }; an optional "field" key holds the minimal
// polynomial of the coefficient field (omitted: the shipped default for
// the recognized groups, else Q).
struct GroupFile {
  GroupTable group;
  std::vector<int> normal;
  FieldPtr field;
};
json group_to_json(const GroupTable& g, const std::vector<int>& normal, const FieldPtr& field);
GroupFile group_from_json(const json& j);

// Descent-problem file { "setting": "semilinear" | "group-rep",
// "extension" | "groups": ..., "object": ..., "b": { name: matrix },
// "checks": [...], "rep": { name: matrix } }. Object/datum/rep/checks
// are optional; which ones a command needs is validated there.
struct Problem {
  SettingPtr setting;
  std::optional<Obj> object;                 // upstairs object of the datum
  std::optional<std::vector<RatMatrix>> b;   // indexed by the Galois group
  std::optional<std::vector<RatMatrix>> rep; // Gamma-representation matrices
  std::optional<std::vector<std::string>> checks;
};
Problem problem_from_json(const json& j);

json datum_to_json(const DescentSetting& s, const DescentDatum& d);

}  // namespace galdesc
