#pragma once

// Shared helpers for the test executables: deterministic random elements
// and hand-built presentations used across suites.

#include <random>
#include <utility>
#include <vector>

#include "cda/element.hpp"
#include "cda/presentation.hpp"

namespace support {

// The two-periodic example presentation as raw input (NOT completed):
// |x| = 2, |y| = 0, |theta| = 1 with x^2 = 0 and theta^2 = x. Generator ids
// follow declaration order: x = 0, y = 1, theta = 2.
inline cda::PresentationPtr raw_counterexample_presentation(
    cda::RewriteConfig cfg = {}) {
  std::vector<cda::Generator> gens = {{"x", 2}, {"y", 0}, {"theta", 1}};
  std::vector<cda::Relation> rels;
  rels.push_back({cda::Word{0, 0}, cda::TermMap{}});
  cda::TermMap theta_sq;
  cda::add_term(theta_sq, cda::Word{0}, cda::Rational(1));
  rels.push_back({cda::Word{2, 2}, std::move(theta_sq)});
  return cda::Presentation::create(std::move(gens), std::move(rels),
                                   std::move(cfg));
}

// A deterministic random element: 1..3 terms, words of length <= max_len
// over all generators, integer coefficients in [-3, 3] (a zero coefficient
// just drops its term).
inline cda::Element random_element(std::mt19937& rng,
                                   const cda::PresentationPtr& p,
                                   int max_len = 3) {
  std::uniform_int_distribution<int> term_count(1, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(
      0, static_cast<int>(p->generator_count()) - 1);
  cda::TermMap terms;
  const int n = term_count(rng);
  for (int i = 0; i < n; ++i) {
    cda::Word w;
    const int length = len(rng);
    for (int j = 0; j < length; ++j) w.push_back(gen(rng));
    cda::add_term(terms, w, cda::Rational(coeff(rng)));
  }
  return cda::Element::from_terms(p, std::move(terms));
}

}  // namespace support
