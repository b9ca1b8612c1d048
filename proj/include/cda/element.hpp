#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cda/presentation.hpp"

namespace cda {

// An element of a presented algebra: an exact Q-linear combination of
// canonical words. Construction always rewrites to canonical form, so map
// equality of terms is equality in the quotient algebra (once the
// presentation is complete). Copying is cheap: the presentation is shared.
class Element {
 public:
  static Element zero(PresentationPtr p);
  static Element unit(PresentationPtr p);
  static Element from_word(PresentationPtr p, Word w);
  static Element from_terms(PresentationPtr p, TermMap raw);
  static Element from_generator(PresentationPtr p, const std::string& name);

  const PresentationPtr& presentation() const { return pres_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Coefficient of a canonical word (0 when absent).
  Rational coeff(const Word& w) const;

  // Degree when every term lives in one degree; nullopt for 0 (which is
  // homogeneous of every degree) and for genuinely mixed elements.
  std::optional<int> homogeneous_degree() const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Rational& q, const Element& a);

  // Throws ValidationError when the operands belong to different algebras.
  bool operator==(const Element& other) const;
  bool operator!=(const Element& other) const { return !(*this == other); }

 private:
  explicit Element(PresentationPtr p);

  PresentationPtr pres_;
  TermMap terms_;
};

// Total order on elements of one presentation (term maps compared
// lexicographically); used for deterministic dedup and sorting.
int compare(const Element& a, const Element& b);

struct ElementLess {
  bool operator()(const Element& a, const Element& b) const {
    return compare(a, b) < 0;
  }
};

// Sum of q_i * a_i; an empty list is rejected (no presentation to live in).
Element linear_combine(const std::vector<std::pair<Rational, Element>>& terms);

// Product in the quotient algebra (concatenate, then rewrite).
Element multiply(const Element& a, const Element& b);

// a^k with a^0 = 1; k >= 0.
Element power(const Element& a, int k);

// Graded commutator [a, b] = ab - (-1)^{|a||b|} ba, extended bilinearly over
// the (automatically homogeneous) words of a and b.
Element graded_commutator(const Element& a, const Element& b);

// Splits an element into its homogeneous pieces, keyed by degree. The zero
// element gives an empty map.
std::map<int, Element> degree_components(const Element& a);

// Max absolute coefficient over the canonical terms; 0 for the zero element.
Rational coeff_norm_inf(const Element& a);

// Parses the element expression grammar:
//   expr := term (('+' | '-') term)*
//   term := [rational] generator-name*
// Tokens are whitespace-separated; a bare rational is a multiple of 1; a
// term with no rational has coefficient 1. The result is canonicalized.
Element parse_element(std::string_view text, const PresentationPtr& p);

// Renders an element in the expression grammar ("0" for zero). Parsing the
// output reproduces the element.
std::string to_expression_string(const Element& a);

// Grammar-level parse into a raw term map, resolving names through an
// explicit table. Used by parse_element and by loaders that need to read
// words before a Presentation exists.
TermMap parse_terms(std::string_view text,
                    const std::map<std::string, int>& name_table);

}  // namespace cda
