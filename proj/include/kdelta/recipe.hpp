#pragma once

// JSON construction recipes: a serializable description of how to build a
// SurfaceModel through the builder operations, with declared curves, marked
// points, and singularity records.
//
// File layout (format_version "1"):
//   {
//     "format_version": "1",
//     "steps": [
//       {"kind": "seed_p2"} | {"kind": "seed_wps", "n": 3} |
//       {"kind": "blow_up", "point": {"label", "incidences", "is_general",
//                                     "exceptional_label"?}} |
//       {"kind": "weighted_blow_up_11", "singularity": "o", "label": "E"} |
//       {"kind": "contract", "curves": ["L2", "E"]}
//     ],
//     "declarations": {              // optional, all three lists optional
//       "curves": [{"label", "class": {basis label: "p/q"}, "through": [...],
//                   "is_irreducible"}],
//       "points": [{"label", "flag_curve", "local_multiplicities":
//                   {curve: {"value": "p/q", "is_upper_bound"}},
//                   "log_discrepancy_on_flag": "p/q", "is_generic"}],
//       "singularities": [{"r", "a", "resolution_chain", "location",
//                          "incident_curves", "hidden_curves"}]
//     }
//   }
//
// Application order: the first step must seed a surface; declared
// singularities and then declared curves apply immediately after the seed
// (so curve classes may reference only the seed basis); the remaining steps
// follow in sequence; declared points attach to the final model. All
// rationals are strings "p/q" with q > 0 and gcd 1 ("p/1" accepted on input,
// normalized to "p" on output).

#include "kdelta/builder.hpp"

#include <map>
#include <string>
#include <vector>

namespace kdelta {

struct RecipeStep {
  std::string kind;  // seed_p2 | seed_wps | blow_up | weighted_blow_up_11 |
                     // contract
  long long n = 0;                   // seed_wps
  PointSpec point;                   // blow_up
  std::string singularity;           // weighted_blow_up_11: location label
  std::string label;                 // weighted_blow_up_11: new curve label
  std::vector<std::string> curves;   // contract
};

struct CurveDeclaration {
  std::string label;
  std::map<std::string, Rational> cls;  // basis label -> coefficient
  std::vector<std::string> through;     // singularity locations
  bool is_irreducible = true;
};

struct RecipeFile {
  std::string format_version = "1";
  std::vector<RecipeStep> steps;
  std::vector<CurveDeclaration> curves;
  std::vector<QuotientSingularity> singularities;
  std::vector<FlagPointSpec> points;
};

// Parses recipe JSON text. Throws ValidationError with parse context on
// malformed JSON, unknown step kinds, or malformed rationals.
RecipeFile recipe_parse(const std::string& json_text);

// Canonical serialization: sorted keys, two-space indent, rationals via
// rat_str, trailing newline. recipe_parse(recipe_serialize(r)) is lossless.
std::string recipe_serialize(const RecipeFile& recipe);

// Runs the recipe through the builder. Errors from individual steps are
// rethrown with "step N (kind): " context; an empty step list is reported as
// "empty recipe".
SurfaceModel build_model(const RecipeFile& recipe);

}  // namespace kdelta
