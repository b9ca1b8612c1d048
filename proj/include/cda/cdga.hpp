#pragma once

#include <vector>

#include "cda/operators.hpp"

namespace cda {

// A presented algebra carrying a candidate curved structure: a degree-1
// operator d (degree 0 in ungraded diagnostic mode) and a curvature element
// c. Validity (d^2 = ad_c, d(c) = 0, degrees) is *not* assumed; it is what
// the checks in checks.hpp establish or refute.
struct CurvedDGA {
  PresentationPtr presentation;
  LinearOperator d;
  Element curvature;

  LinearOperator ad_c() const {
    return LinearOperator::inner_derivation(curvature);
  }
};

// The canonical-word probe basis used by all "... = 0 on the test set"
// checks: every nonzero canonical form of a word of length <= max_word_len,
// deduplicated, in order of first appearance (words enumerated length-lex).
// Contains the unit, so operator identities checked on it see the unit too.
struct TestSet {
  std::vector<Element> elements;
  int max_word_len = 0;
};

TestSet spanning_test_set(const PresentationPtr& p, int max_word_len);

// d applied k times, literally.
Element iterate_d(const CurvedDGA& dga, int k, const Element& a);

// The closed form of the k-th iterate: (ad_c)^m on even k = 2m, and
// (ad_c)^m after d on odd k = 2m + 1. Agreeing with iterate_d on valid
// structures is the content of the normal-form checks.
Element normal_form_power(const CurvedDGA& dga, int k, const Element& a);

// The binomial expansion of (ad_c)^r for even-degree curvature:
//   sum_{j=0}^{r} (-1)^j C(r, j) c^{r-j} a c^j.
// Throws ValidationError when c is inhomogeneous or of odd degree (the
// signless expansion is only valid for even |c|).
Element binomial_ad_power(const Element& c, int r, const Element& a);

}  // namespace cda
