#include "cda/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cda/errors.hpp"

namespace cda {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
    return false;
  }
  for (char ch : s) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
      return false;
    }
  }
  return true;
}

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word concat3(const Word& a, const Word& b, const Word& c) {
  Word w;
  w.reserve(a.size() + b.size() + c.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  w.insert(w.end(), c.begin(), c.end());
  return w;
}

}  // namespace

void add_term(TermMap& terms, const Word& w, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms.try_emplace(w, q);
  if (inserted) return;
  it->second += q;
  if (it->second == 0) terms.erase(it);
}

std::map<std::string, int> make_name_table(
    const std::vector<Generator>& gens) {
  std::map<std::string, int> table;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string& name = gens[i].name;
    if (!is_identifier(name)) {
      throw ValidationError("generator name is not an identifier: '" + name +
                            "'");
    }
    if (!table.emplace(name, static_cast<int>(i)).second) {
      throw ValidationError("duplicate generator name: '" + name + "'");
    }
  }
  return table;
}

PresentationPtr Presentation::create(std::vector<Generator> generators,
                                     std::vector<Relation> relations,
                                     RewriteConfig config) {
  auto p = std::shared_ptr<Presentation>(new Presentation());
  p->generators_ = std::move(generators);
  p->name_to_id_ = make_name_table(p->generators_);
  p->config_ = config;
  if (p->config_.max_word_len < 1) {
    throw ValidationError("max_word_len must be at least 1");
  }

  const LengthLexLess less;
  const auto check_id = [&](int id, const Word& w) {
    if (id < 0 || id >= static_cast<int>(p->generators_.size())) {
      std::ostringstream os;
      os << "word references unknown generator id " << id << " (word size "
         << w.size() << ")";
      throw ValidationError(os.str());
    }
  };

  for (Relation& r : relations) {
    if (r.lhs.size() < 2) {
      throw ValidationError(
          "relation left-hand side must be a word of length >= 2, got '" +
          p->word_to_string(r.lhs) + "'");
    }
    for (int id : r.lhs) check_id(id, r.lhs);
    const int lhs_deg = p->word_degree(r.lhs);
    TermMap cleaned;
    for (const auto& [w, q] : r.rhs) {
      if (q == 0) continue;
      for (int id : w) check_id(id, w);
      if (!less(w, r.lhs)) {
        throw ValidationError("relation is not oriented: monomial '" +
                              p->word_to_string(w) +
                              "' is not length-lex smaller than '" +
                              p->word_to_string(r.lhs) + "'");
      }
      if (p->word_degree(w) != lhs_deg) {
        throw ValidationError(
            "relation is not degree-homogeneous: '" + p->word_to_string(w) +
            "' has degree " + std::to_string(p->word_degree(w)) + " but '" +
            p->word_to_string(r.lhs) + "' has degree " +
            std::to_string(lhs_deg));
      }
      cleaned.emplace(w, q);
    }
    r.rhs = std::move(cleaned);
  }
  p->relations_ = std::move(relations);

  // Canonicalize right-hand sides against the whole rule set. Rewriting
  // only moves monomials strictly down in length-lex order, so orientation
  // survives.
  for (Relation& r : p->relations_) {
    r.rhs = p->normalize(std::move(r.rhs));
  }

  p->complete_ = is_locally_confluent(*p, nullptr);
  return p;
}

const Generator& Presentation::generator(int id) const {
  if (id < 0 || id >= static_cast<int>(generators_.size())) {
    throw ValidationError("generator id out of range: " + std::to_string(id));
  }
  return generators_[static_cast<std::size_t>(id)];
}

int Presentation::generator_id(const std::string& name) const {
  auto it = name_to_id_.find(name);
  if (it == name_to_id_.end()) {
    throw ValidationError("unknown generator: '" + name + "'");
  }
  return it->second;
}

std::optional<int> Presentation::find_generator(const std::string& name) const {
  auto it = name_to_id_.find(name);
  if (it == name_to_id_.end()) return std::nullopt;
  return it->second;
}

int Presentation::word_degree(const Word& w) const {
  int deg = 0;
  for (int id : w) deg += generator(id).degree;
  return deg;
}

std::string Presentation::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += generator(w[i]).name;
  }
  return out;
}

Word Presentation::word_from_string(const std::string& text) const {
  std::vector<std::string> names;
  std::istringstream in(text);
  std::string name;
  while (in >> name) names.push_back(name);
  if (names.empty() || (names.size() == 1 && names[0] == "1")) return Word{};
  Word w;
  w.reserve(names.size());
  for (const std::string& n : names) w.push_back(generator_id(n));
  return w;
}

std::optional<std::pair<std::size_t, std::size_t>> Presentation::find_redex(
    const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t ri = 0; ri < relations_.size(); ++ri) {
      const Word& lhs = relations_[ri].lhs;
      if (lhs.size() > w.size() - pos) continue;
      if (std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) {
        return std::make_pair(pos, ri);
      }
    }
  }
  return std::nullopt;
}

bool Presentation::is_canonical_word(const Word& w) const {
  return !find_redex(w).has_value();
}

TermMap Presentation::normalize(TermMap terms) const {
  TermMap result;
  std::vector<std::pair<Word, Rational>> work(
      std::make_move_iterator(terms.begin()),
      std::make_move_iterator(terms.end()));
  while (!work.empty()) {
    Word w = std::move(work.back().first);
    Rational q = std::move(work.back().second);
    work.pop_back();
    if (q == 0) continue;
    if (static_cast<int>(w.size()) > config_.max_word_len) {
      throw GuardError("word of length " + std::to_string(w.size()) +
                       " exceeds the cutoff " +
                       std::to_string(config_.max_word_len));
    }
    const auto redex = find_redex(w);
    if (!redex) {
      add_term(result, w, q);
      continue;
    }
    const auto [pos, ri] = *redex;
    const Relation& rule = relations_[ri];
    const Word prefix(w.begin(), w.begin() + static_cast<long>(pos));
    const Word suffix(w.begin() + static_cast<long>(pos + rule.lhs.size()),
                      w.end());
    for (const auto& [m, c] : rule.rhs) {
      Rational nq = q * c;
      work.emplace_back(concat3(prefix, m, suffix), std::move(nq));
    }
  }
  return result;
}

std::vector<CriticalPair> critical_pairs(const Presentation& p) {
  std::vector<CriticalPair> out;
  const auto& rules = p.relations();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& u = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& v = rules[j].lhs;

      // Proper overlaps: a length-k suffix of u equals a prefix of v, so
      // u and v[k:] share the word u . v[k:].
      const std::size_t kmax = std::min(u.size(), v.size()) - 1;
      for (std::size_t k = 1; k <= kmax; ++k) {
        if (!std::equal(u.end() - static_cast<long>(k), u.end(), v.begin())) {
          continue;
        }
        const Word head(u.begin(), u.end() - static_cast<long>(k));
        const Word tail(v.begin() + static_cast<long>(k), v.end());
        CriticalPair cp;
        cp.overlap = concat(u, tail);
        for (const auto& [m, c] : rules[i].rhs) {
          add_term(cp.left, concat(m, tail), c);
        }
        for (const auto& [m, c] : rules[j].rhs) {
          add_term(cp.right, concat(head, m), c);
        }
        out.push_back(std::move(cp));
      }

      // Containments: v occurs inside u (strictly inside, or the same word
      // for two distinct rules with equal left-hand sides).
      const bool applicable =
          v.size() < u.size() || (i != j && v.size() == u.size());
      if (!applicable) continue;
      for (std::size_t pos = 0; pos + v.size() <= u.size(); ++pos) {
        if (!std::equal(v.begin(), v.end(),
                        u.begin() + static_cast<long>(pos))) {
          continue;
        }
        const Word prefix(u.begin(), u.begin() + static_cast<long>(pos));
        const Word suffix(u.begin() + static_cast<long>(pos + v.size()),
                          u.end());
        CriticalPair cp;
        cp.overlap = u;
        cp.left = rules[i].rhs;
        for (const auto& [m, c] : rules[j].rhs) {
          add_term(cp.right, concat3(prefix, m, suffix), c);
        }
        out.push_back(std::move(cp));
      }
    }
  }
  return out;
}

bool is_locally_confluent(const Presentation& p,
                          CriticalPair* counterexample) {
  for (const CriticalPair& cp : critical_pairs(p)) {
    if (p.normalize(cp.left) != p.normalize(cp.right)) {
      if (counterexample) *counterexample = cp;
      return false;
    }
  }
  return true;
}

PresentationPtr complete_presentation(const PresentationPtr& p,
                                      int max_rounds) {
  if (!p) throw ValidationError("null presentation");
  if (max_rounds < 0) throw ValidationError("max_rounds must be >= 0");

  std::vector<Relation> rules = p->relations();
  const auto build = [&](const std::vector<Relation>& rs) {
    return Presentation::create(p->generators(), rs, p->config());
  };

  PresentationPtr q = build(rules);
  int passes = 0;
  std::string last_overlap;
  while (true) {
    bool added = false;
    // The pair list is a snapshot; normalization below always uses the live
    // rule set, so pairs resolved by a rule added mid-pass just join.
    for (const CriticalPair& cp : critical_pairs(*q)) {
      const TermMap l = q->normalize(cp.left);
      const TermMap r = q->normalize(cp.right);
      if (l == r) continue;

      TermMap diff = l;
      for (const auto& [w, c] : r) add_term(diff, w, Rational(-c));
      const Word lead = diff.rbegin()->first;
      const Rational lead_coeff = diff.rbegin()->second;
      if (lead.size() < 2) {
        throw CompletionError(
            "critical pair on '" + q->word_to_string(cp.overlap) +
            "' forces the identity '" + q->word_to_string(lead) +
            " = ...', which no monomial rule of length >= 2 can express");
      }
      TermMap rhs;
      for (auto it = diff.begin(); std::next(it) != diff.end(); ++it) {
        Rational c = -it->second / lead_coeff;
        rhs.emplace(it->first, std::move(c));
      }
      rules.push_back(Relation{lead, std::move(rhs)});
      last_overlap = q->word_to_string(cp.overlap);
      q = build(rules);
      added = true;
    }
    if (!added) break;
    if (++passes > max_rounds) {
      throw CompletionError("completion did not stabilize within " +
                            std::to_string(max_rounds) +
                            " rounds; last unresolved overlap: '" +
                            last_overlap + "'");
    }
  }

  // Interreduction: drop a rule only when the others already rewrite both
  // of its sides to one normal form *and* the smaller system stays locally
  // confluent, so the guarantees above survive.
  bool changed = true;
  while (changed && rules.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      std::vector<Relation> rest;
      rest.reserve(rules.size() - 1);
      for (std::size_t j = 0; j < rules.size(); ++j) {
        if (j != i) rest.push_back(rules[j]);
      }
      PresentationPtr reduced = build(rest);
      TermMap lhs_map;
      add_term(lhs_map, rules[i].lhs, Rational(1));
      if (reduced->is_complete() &&
          reduced->normalize(lhs_map) == reduced->normalize(rules[i].rhs)) {
        rules = std::move(rest);
        changed = true;
        break;
      }
    }
  }

  return build(rules);
}

}  // namespace cda
