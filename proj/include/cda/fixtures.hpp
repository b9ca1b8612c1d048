#pragma once

#include "cda/io.hpp"

namespace cda {

// Built-in inputs, addressable from the CLI as "builtin:<name>". These are
// the JSON texts the README documents; the convenience builders parse them
// with the given config.

// "counterexample": the two-periodic algebra k<x, y>/(x^2) (|x| = 2,
// |y| = 0) extended by a degree-1 generator theta with theta^2 = x, with
// d = ad_theta and curvature c = x. Its d has nilpotency order exactly 6.
const char* builtin_counterexample_cdga_json();

// "matrix": an ungraded surrogate of 2x2 matrices with d = ad_a for
// a ~ E12 and curvature a^2 = 0; the d^2 = ad_c axiom fails on it.
const char* builtin_matrix_cdga_json();

// "central": a curved structure whose curvature z is central, so ad_z = 0
// and d^2 = 0 although z itself is nonzero.
const char* builtin_central_cdga_json();

// "toy": the four-vertex scenario (one triangle, one hollow cycle) whose
// triangle entry time is shifted by ell(c) = coefficient of x in c.
const char* builtin_toy_scenario_json();

CurvedDGA builtin_counterexample(const RewriteConfig& cfg = {});
CurvedDGA builtin_matrix(const RewriteConfig& cfg = {});
CurvedDGA builtin_central(const RewriteConfig& cfg = {});
Scenario builtin_toy_scenario(const RewriteConfig& cfg = {});

}  // namespace cda
