#pragma once

#include <map>
#include <optional>

#include "cda/bottleneck.hpp"
#include "cda/checks.hpp"
#include "cda/filtration.hpp"

namespace cda {

// Outcome of the stability verification for one curvature pair (c, c'):
// build both induced filtrations, compare barcodes in every dimension of
// the complex, and check the exact inequalities
//   bottleneck_k <= delta               (delta = sup entry-time shift)
//   delta        <= L * |c - c'|_inf    (L = max functional l1-norm)
//   bottleneck_k <= L * |c - c'|_inf
// An infinite bottleneck distance (nullopt) fails the comparisons.
struct StabilityReport {
  Rational delta;
  Rational curvature_dist;
  Rational lipschitz_constant;
  std::map<int, std::optional<Rational>> bottleneck_by_dim;
  bool bottleneck_le_delta = false;
  bool delta_le_lipschitz = false;
  bool bottleneck_le_lipschitz = false;

  bool pass() const {
    return bottleneck_le_delta && delta_le_lipschitz && bottleneck_le_lipschitz;
  }
  CheckReport to_report() const;
};

StabilityReport verify_stability(const SimplicialComplex& complex,
                                 const CurvatureFiltrationSpec& spec,
                                 const Element& c, const Element& c_prime);

}  // namespace cda
