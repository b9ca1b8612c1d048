#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cda/cdga.hpp"
#include "cda/filtration.hpp"

namespace cda {

using Json = nlohmann::json;

// Reads and parses a JSON file; ParseError with the path on failure.
Json load_json_file(const std::filesystem::path& path);

// ---- Presentation files ----------------------------------------------
// {
//   "generators": [{"name": "x", "degree": 2}, ...],
//   "relations":  [{"lhs": "x x", "rhs": [ <element literal terms> ]}, ...]
// }
// Words are space-separated generator names; rationals are strings. The
// loaded presentation is run through Knuth-Bendix completion so canonical
// forms are unique.
PresentationPtr presentation_from_json(const Json& j, const RewriteConfig& cfg,
                                       int max_completion_rounds = 64);
Json presentation_to_json(const Presentation& p);

// ---- Element literals -------------------------------------------------
// [{"coeff": "3/10", "word": "x y"}, ...]; [] is zero, "" the unit word.
Element element_from_json(const Json& j, const PresentationPtr& p);
Json element_to_json(const Element& e);

// ---- Curved structure files -------------------------------------------
// {
//   "presentation": { ... } | "relative/path.json",
//   "differential": {"kind": "ad", "of": [ ... ]}
//                 | {"kind": "leibniz", "degree": 1, "values": {"x": [...]}},
//   "curvature":    [ ... ]
// }
// base_dir resolves a path-valued "presentation". The differential's degree
// must come out 0 or 1.
CurvedDGA cdga_from_json(const Json& j, const RewriteConfig& cfg,
                         const std::filesystem::path& base_dir = {});

// ---- Scenario files -----------------------------------------------------
// {
//   "presentation": optional, as in curved structure files (defaults to the
//                   built-in two-periodic example's presentation),
//   "complex":    {"vertices": [1,2,3,4], "edges": [[1,2],...], "max_dim": 2}
//                 | {"simplices": [[1],[2],[1,2],...]}   (an explicit
//                   face-closed list; use this to pin a complex that is not
//                   the clique complex of its own 1-skeleton),
//   "filtration": {"base_times": {"0": "0", ...},
//                  "tagged": {"1 2 3": "ell"},
//                  "functionals": {"ell": {"x": "1"}}},
//   "curvatures": {"c0": [], "c1": [{"coeff": "3/10", "word": "x"}]}
// }
struct Scenario {
  PresentationPtr presentation;
  SimplicialComplex complex;
  CurvatureFiltrationSpec filtration;
  std::vector<std::pair<std::string, Element>> curvatures;  // name-sorted

  const Element& curvature(const std::string& name) const;
};

Scenario scenario_from_json(const Json& j, const RewriteConfig& cfg,
                            const std::filesystem::path& base_dir = {});

}  // namespace cda
