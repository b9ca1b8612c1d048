#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cda/cdga.hpp"

namespace cda {

// One verified (or refuted) claim. `witness` carries the element exhibiting
// a failure — or, for existence claims like sharpness probes, the element
// exhibiting success. `parameters` are ordered key/value strings echoed
// into reports.
struct ClaimResult {
  std::string claim;
  bool pass = false;
  std::optional<Element> witness;
  std::vector<std::pair<std::string, std::string>> parameters;
};

struct CheckReport {
  std::vector<ClaimResult> claims;

  bool all_pass() const;
};

// Checks, on every a in the test set, the derivation identity
//   d(ad_x(a)) - (-1)^{|x|} ad_x(d(a)) = ad_{d(x)}(a)
// for homogeneous x, and additionally d(ad_c(a)) = ad_c(d(a)) when x is the
// curvature itself (whose image under d should vanish).
CheckReport check_structural_identities(const CurvedDGA& dga, const Element& x,
                                        const TestSet& ts);

// The three defining axioms, each with a failure witness when refuted:
//   - d^2 = ad_c on the test set;
//   - d(c) = 0;
//   - d shifts degree by its declared degree on the test set, and c is
//     homogeneous of twice that degree (when nonzero).
struct CdaAxiomReport {
  bool d_squared_equals_ad_c = false;
  bool d_of_c_zero = false;
  bool degree_of_d_ok = false;
  std::optional<Element> witness_d_squared;
  std::optional<Element> witness_degree;

  bool all_pass() const {
    return d_squared_equals_ad_c && d_of_c_zero && degree_of_d_ok;
  }
  CheckReport to_report() const;
};

CdaAxiomReport check_cda_axioms(const CurvedDGA& dga, const TestSet& ts);

// Smallest k <= max_k with op^k = 0 on the whole test set. When found,
// `witness` is an element with op^{k-1}(witness) != 0 and `witness_image`
// is that nonzero value; when not found, index is nullopt and max_k records
// how far the search went.
struct NilpotencyResult {
  std::optional<int> index;
  std::optional<Element> witness;
  std::optional<Element> witness_image;
  int max_k = 0;
};

NilpotencyResult nilpotency_index(const LinearOperator& op, const TestSet& ts,
                                  int max_k);

// For curvature with c^n = 0 (checked; ValidationError otherwise), verifies
// the vanishing bounds (ad_c)^{2n-1} = 0 and d^{4n-2} = 0 on the test set,
// and probes sharpness: is there a test element with d^{4n-3} != 0?
// Sharpness failing is not an error — the bound need not be tight on every
// example — so it is reported as its own claim.
struct BoundReport {
  int n = 0;
  bool ad_power_zero = false;
  bool d_power_zero = false;
  bool sharp_probe_nonzero = false;
  std::optional<Element> witness_ad;     // failure witness
  std::optional<Element> witness_d;      // failure witness
  std::optional<Element> sharp_witness;  // success witness

  bool bounds_hold() const { return ad_power_zero && d_power_zero; }
  CheckReport to_report() const;
};

BoundReport verify_bound_4n_minus_2(const CurvedDGA& dga, int n,
                                    const TestSet& ts);

// Does the two-sided ideal generated by c satisfy (c)^n = 0? Verified by
// rewriting every product a0 c a1 c ... c an (n copies of c, separators from
// the test set) to canonical form. `nonzero_product` witnesses failure.
// When the ideal power does vanish, the implied operator bound
// (ad_c)^n = 0 is confirmed on the test set as well.
struct IdealNilpotencyReport {
  int n = 0;
  bool ideal_power_zero = false;
  bool ad_power_zero = false;
  std::optional<Element> nonzero_product;
  std::optional<Element> witness_ad;

  CheckReport to_report() const;
};

IdealNilpotencyReport check_curvature_ideal_nilpotent(const PresentationPtr& p,
                                                      const Element& c, int n,
                                                      const TestSet& ts);

}  // namespace cda
