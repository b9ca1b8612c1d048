#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cda/element.hpp"

namespace cda {

// A linear endomorphism of a presented algebra, built from a small closed
// vocabulary: inner derivations ad_x = [x, -], one-sided multiplications,
// Leibniz extensions of generator assignments, sums, compositions and
// powers. Operators are immutable values sharing their structure.
class LinearOperator {
 public:
  // ad_x: a |-> [x, a] (graded commutator).
  static LinearOperator inner_derivation(Element x);
  // L_x: a |-> x a.
  static LinearOperator left_mult(Element x);
  // R_x: a |-> a x.
  static LinearOperator right_mult(Element x);
  // The degree-p derivation with D(g) = values[g], extended to words by the
  // graded Leibniz rule D(uv) = D(u)v + (-1)^{p|u|} u D(v). Generators with
  // no assigned value make apply() fail, not construction, so partial
  // assignments are usable on subalgebras.
  static LinearOperator leibniz_derivation(
      PresentationPtr p, int degree,
      std::map<std::string, Element> generator_values);
  static LinearOperator sum(std::vector<LinearOperator> ops);
  // ops[0] after ops[1] after ... (rightmost acts first).
  static LinearOperator compose(std::vector<LinearOperator> ops);
  // op applied k times; k = 0 is the identity.
  static LinearOperator power(LinearOperator op, int k);

  Element apply(const Element& a) const;

  // Degree shift of the operator, when determined: the homogeneous degree
  // of x for ad/L/R (nullopt when x is zero or mixed), the declared degree
  // for Leibniz derivations, and the evident arithmetic for sums (all
  // summands must agree), compositions and powers.
  std::optional<int> degree() const;

  const PresentationPtr& presentation() const;

  // Compact human-readable rendering, e.g. "ad(theta)" or "(ad(x))^3".
  std::string describe() const;

 private:
  struct Node;
  explicit LinearOperator(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

}  // namespace cda
