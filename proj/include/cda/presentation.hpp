#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cda/rational.hpp"

namespace cda {

// A graded generator of a finitely presented algebra. Generator ids are
// indices into the declaration list, so declaration order is also the
// lexicographic tie-break order for words.
struct Generator {
  std::string name;
  int degree = 0;

  bool operator==(const Generator&) const = default;
};

// A word is a sequence of generator ids; the empty word is the unit 1.
using Word = std::vector<int>;

// Total order on words: shorter first, ties broken lexicographically by
// generator id. This is the termination order for rewriting: every rule
// replaces a word by strictly smaller ones, so rewriting cannot loop.
struct LengthLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// A linear combination of words with nonzero rational coefficients, keyed
// in length-lex order. The zero combination is the empty map.
using TermMap = std::map<Word, Rational, LengthLexLess>;

// Adds q * w into terms, erasing the entry if the coefficient cancels.
void add_term(TermMap& terms, const Word& w, const Rational& q);

// An oriented rewrite rule lhs -> rhs with monomial left-hand side.
// Invariants (enforced at Presentation construction):
//   - lhs has length >= 2 (generators themselves are never rewritten);
//   - every monomial of rhs is strictly length-lex smaller than lhs;
//   - rhs is degree-homogeneous of the same degree as lhs.
struct Relation {
  Word lhs;
  TermMap rhs;

  bool operator==(const Relation&) const = default;
};

// Operational limits for rewriting-based computations.
struct RewriteConfig {
  // Any operation that would build a word longer than this aborts with
  // GuardError. Rewriting itself never lengthens words; the guard trips on
  // concatenation (products, operator applications).
  int max_word_len = 32;
  // Cap on the number of words enumerated when building a spanning test
  // set, to keep accidental "max length 30" requests from spinning.
  std::size_t max_test_words = 200000;
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

// One word that can be rewritten two ways, together with the two one-step
// reducts. Produced by critical_pairs(); a pair "joins" when both reducts
// share a normal form.
struct CriticalPair {
  Word overlap;
  TermMap left;
  TermMap right;
};

// Validates generator names (nonempty identifiers, unique) and returns the
// name -> id table. Shared between Presentation and the parsers, which need
// to resolve names before a Presentation exists.
std::map<std::string, int> make_name_table(const std::vector<Generator>& gens);

// A finitely presented Z-graded associative unital algebra over Q, with its
// relations oriented into a terminating monomial rewrite system. Immutable;
// always handled through shared_ptr so elements can cheaply share it.
//
// Canonical forms are unique once the rule set is confluent (is_complete());
// complete_presentation() closes a system under critical pairs. Rewriting is
// still well-defined (terminating, quotient-sound) before completion, which
// is what lets completion itself reuse normalize().
class Presentation {
 public:
  static PresentationPtr create(std::vector<Generator> generators,
                                std::vector<Relation> relations,
                                RewriteConfig config = {});

  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const RewriteConfig& config() const { return config_; }

  std::size_t generator_count() const { return generators_.size(); }
  const Generator& generator(int id) const;
  // Throws ValidationError on unknown names.
  int generator_id(const std::string& name) const;
  std::optional<int> find_generator(const std::string& name) const;

  int word_degree(const Word& w) const;
  // Space-separated generator names; the unit renders as "1".
  std::string word_to_string(const Word& w) const;
  // Inverse of word_to_string ("1" or "" give the unit).
  Word word_from_string(const std::string& text) const;

  // Rewrites a linear combination to canonical form: leftmost redex first,
  // repeated until no rule applies to any surviving word. Unique normal
  // forms are guaranteed once is_complete().
  TermMap normalize(TermMap terms) const;
  bool is_canonical_word(const Word& w) const;

  // True when every critical pair joins (checked at construction).
  bool is_complete() const { return complete_; }

  // Same generators (names and degrees, in order) and same rule set.
  // Operational config is deliberately not part of algebra identity.
  bool operator==(const Presentation& other) const {
    return generators_ == other.generators_ && relations_ == other.relations_;
  }

 private:
  Presentation() = default;

  // First (position, rule index) whose lhs matches w at that position,
  // scanning positions left to right and rules in declaration order.
  std::optional<std::pair<std::size_t, std::size_t>> find_redex(
      const Word& w) const;

  std::vector<Generator> generators_;
  std::vector<Relation> relations_;
  std::map<std::string, int> name_to_id_;
  RewriteConfig config_;
  bool complete_ = false;
};

// All critical pairs of the rule set: proper overlaps (a suffix of one lhs
// equals a prefix of another) and containments (one lhs inside another).
std::vector<CriticalPair> critical_pairs(const Presentation& p);

// True iff every critical pair joins. On failure, *counterexample (when
// non-null) receives the offending pair.
bool is_locally_confluent(const Presentation& p,
                          CriticalPair* counterexample = nullptr);

// Bounded Knuth-Bendix completion. The result presents the same quotient
// algebra, is locally confluent (hence, with termination, confluent), and
// has interreduced right-hand sides. Throws CompletionError when the system
// does not stabilize within max_rounds rule-adding passes or when a critical
// pair forces a rule whose left-hand side would have length < 2.
PresentationPtr complete_presentation(const PresentationPtr& p,
                                      int max_rounds = 64);

}  // namespace cda
