#include "cda/fixtures.hpp"

namespace cda {

const char* builtin_counterexample_cdga_json() {
  // Declaration order matters: with x before theta, completion orients the
  // derived rule as "theta x" -> "x theta".
  return R"({
  "presentation": {
    "generators": [
      {"name": "x", "degree": 2},
      {"name": "y", "degree": 0},
      {"name": "theta", "degree": 1}
    ],
    "relations": [
      {"lhs": "x x", "rhs": []},
      {"lhs": "theta theta", "rhs": [{"coeff": "1", "word": "x"}]}
    ]
  },
  "differential": {"kind": "ad", "of": [{"coeff": "1", "word": "theta"}]},
  "curvature": [{"coeff": "1", "word": "x"}]
})";
}

const char* builtin_matrix_cdga_json() {
  // a ~ E12, b ~ E21; the four relations present 2x2 matrices over Q with
  // basis {1, a, b, ab, ba}. Everything sits in degree 0, and the declared
  // curvature a*a rewrites to zero, so this is a deliberately broken curved
  // structure: d = ad_a has even degree and d^2 != ad_c (witness b).
  return R"({
  "presentation": {
    "generators": [
      {"name": "a", "degree": 0},
      {"name": "b", "degree": 0}
    ],
    "relations": [
      {"lhs": "a a", "rhs": []},
      {"lhs": "b b", "rhs": []},
      {"lhs": "a b a", "rhs": [{"coeff": "1", "word": "a"}]},
      {"lhs": "b a b", "rhs": [{"coeff": "1", "word": "b"}]}
    ]
  },
  "differential": {"kind": "ad", "of": [{"coeff": "1", "word": "a"}]},
  "curvature": [{"coeff": "1", "word": "a a"}]
})";
}

const char* builtin_central_cdga_json() {
  // z is central (z u = u z), so ad_z = 0; the Leibniz differential u -> z,
  // z -> 0 squares to zero even though the curvature z is nonzero.
  return R"({
  "presentation": {
    "generators": [
      {"name": "u", "degree": 1},
      {"name": "z", "degree": 2}
    ],
    "relations": [
      {"lhs": "z u", "rhs": [{"coeff": "1", "word": "u z"}]}
    ]
  },
  "differential": {
    "kind": "leibniz",
    "degree": 1,
    "values": {"u": [{"coeff": "1", "word": "z"}], "z": []}
  },
  "curvature": [{"coeff": "1", "word": "z"}]
})";
}

const char* builtin_toy_scenario_json() {
  // Four vertices, five edges, and a single filled triangle [1,2,3]; the
  // cycle 1-3-4 stays hollow, so H1 keeps one class forever. Note this is
  // NOT the clique complex of its own 1-skeleton (that would also fill
  // [1,3,4]), which is why the complex is pinned by an explicit simplex
  // list. The triangle is tagged with the functional ell = coefficient of
  // x, so its entry time is 2 + ell(c).
  return R"({
  "complex": {
    "simplices": [
      [1], [2], [3], [4],
      [1, 2], [1, 3], [1, 4], [2, 3], [3, 4],
      [1, 2, 3]
    ]
  },
  "filtration": {
    "base_times": {"0": "0", "1": "1", "2": "2"},
    "tagged": {"1 2 3": "ell"},
    "functionals": {"ell": {"x": "1"}}
  },
  "curvatures": {
    "c0": [],
    "c1": [{"coeff": "3/10", "word": "x"}]
  }
})";
}

CurvedDGA builtin_counterexample(const RewriteConfig& cfg) {
  return cdga_from_json(Json::parse(builtin_counterexample_cdga_json()), cfg);
}

CurvedDGA builtin_matrix(const RewriteConfig& cfg) {
  return cdga_from_json(Json::parse(builtin_matrix_cdga_json()), cfg);
}

CurvedDGA builtin_central(const RewriteConfig& cfg) {
  return cdga_from_json(Json::parse(builtin_central_cdga_json()), cfg);
}

Scenario builtin_toy_scenario(const RewriteConfig& cfg) {
  return scenario_from_json(Json::parse(builtin_toy_scenario_json()), cfg);
}

}  // namespace cda
