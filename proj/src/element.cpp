#include "cda/element.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cda/errors.hpp"

namespace cda {

namespace {

const PresentationPtr& require_presentation(const PresentationPtr& p) {
  if (!p) throw ValidationError("element requires a presentation");
  return p;
}

// Operands must live in the same algebra: same object, or value-equal
// presentations.
const PresentationPtr& common_presentation(const Element& a,
                                           const Element& b) {
  if (a.presentation() == b.presentation()) return a.presentation();
  if (*a.presentation() == *b.presentation()) return a.presentation();
  throw ValidationError("elements belong to different presentations");
}

}  // namespace

Element::Element(PresentationPtr p) : pres_(std::move(p)) {
  require_presentation(pres_);
}

Element Element::zero(PresentationPtr p) { return Element(std::move(p)); }

Element Element::unit(PresentationPtr p) {
  return from_word(std::move(p), Word{});
}

Element Element::from_word(PresentationPtr p, Word w) {
  TermMap raw;
  raw.emplace(std::move(w), Rational(1));
  return from_terms(std::move(p), std::move(raw));
}

Element Element::from_terms(PresentationPtr p, TermMap raw) {
  Element e(std::move(p));
  e.terms_ = e.pres_->normalize(std::move(raw));
  return e;
}

Element Element::from_generator(PresentationPtr p, const std::string& name) {
  require_presentation(p);
  const int id = p->generator_id(name);
  return from_word(std::move(p), Word{id});
}

Rational Element::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Element::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::optional<int> deg;
  for (const auto& [w, q] : terms_) {
    const int d = pres_->word_degree(w);
    if (!deg) {
      deg = d;
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return deg;
}

Element Element::operator-() const {
  Element out(pres_);
  for (const auto& [w, q] : terms_) out.terms_.emplace(w, Rational(-q));
  return out;
}

Element operator+(const Element& a, const Element& b) {
  const PresentationPtr& p = common_presentation(a, b);
  TermMap sum = a.terms_;
  for (const auto& [w, q] : b.terms_) add_term(sum, w, q);
  // Sums of canonical forms are canonical; no rewriting needed.
  Element out(p);
  out.terms_ = std::move(sum);
  return out;
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  const PresentationPtr& p = common_presentation(a, b);
  const int guard = p->config().max_word_len;
  TermMap raw;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      if (static_cast<int>(wa.size() + wb.size()) > guard) {
        throw GuardError("product would build a word of length " +
                         std::to_string(wa.size() + wb.size()) +
                         ", above the cutoff " + std::to_string(guard));
      }
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      Rational q = ca * cb;
      add_term(raw, w, q);
    }
  }
  return Element::from_terms(p, std::move(raw));
}

Element operator*(const Rational& q, const Element& a) {
  Element out(a.presentation());
  if (q == 0) return out;
  for (const auto& [w, c] : a.terms_) {
    Rational nc = q * c;
    out.terms_.emplace(w, std::move(nc));
  }
  return out;
}

bool Element::operator==(const Element& other) const {
  common_presentation(*this, other);
  return terms_ == other.terms_;
}

int compare(const Element& a, const Element& b) {
  common_presentation(a, b);
  const LengthLexLess less;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (less(ia->first, ib->first)) return -1;
    if (less(ib->first, ia->first)) return 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != a.terms().end()) return 1;
  if (ib != b.terms().end()) return -1;
  return 0;
}

Element linear_combine(
    const std::vector<std::pair<Rational, Element>>& terms) {
  if (terms.empty()) {
    throw ValidationError("linear_combine needs at least one term");
  }
  Element acc = terms.front().first * terms.front().second;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    acc = acc + terms[i].first * terms[i].second;
  }
  return acc;
}

Element multiply(const Element& a, const Element& b) { return a * b; }

Element power(const Element& a, int k) {
  if (k < 0) throw ValidationError("power exponent must be >= 0");
  Element acc = Element::unit(a.presentation());
  for (int i = 0; i < k; ++i) acc = acc * a;
  return acc;
}

Element graded_commutator(const Element& a, const Element& b) {
  const PresentationPtr& p = common_presentation(a, b);
  // Words are homogeneous, so expanding bilinearly over words applies the
  // Koszul sign componentwise.
  TermMap raw;
  const int guard = p->config().max_word_len;
  for (const auto& [wa, ca] : a.terms()) {
    const int da = p->word_degree(wa);
    for (const auto& [wb, cb] : b.terms()) {
      const int db = p->word_degree(wb);
      if (static_cast<int>(wa.size() + wb.size()) > guard) {
        throw GuardError("commutator would build a word of length " +
                         std::to_string(wa.size() + wb.size()) +
                         ", above the cutoff " + std::to_string(guard));
      }
      Word ab;
      ab.reserve(wa.size() + wb.size());
      ab.insert(ab.end(), wa.begin(), wa.end());
      ab.insert(ab.end(), wb.begin(), wb.end());
      Word ba;
      ba.reserve(wa.size() + wb.size());
      ba.insert(ba.end(), wb.begin(), wb.end());
      ba.insert(ba.end(), wa.begin(), wa.end());
      Rational q = ca * cb;
      add_term(raw, ab, q);
      const bool both_odd = (da % 2 != 0) && (db % 2 != 0);
      add_term(raw, ba, both_odd ? q : Rational(-q));
    }
  }
  return Element::from_terms(p, std::move(raw));
}

std::map<int, Element> degree_components(const Element& a) {
  std::map<int, TermMap> buckets;
  for (const auto& [w, q] : a.terms()) {
    buckets[a.presentation()->word_degree(w)].emplace(w, q);
  }
  std::map<int, Element> out;
  for (auto& [deg, tm] : buckets) {
    out.insert({deg, Element::from_terms(a.presentation(), std::move(tm))});
  }
  return out;
}

Rational coeff_norm_inf(const Element& a) {
  Rational best(0);
  for (const auto& [w, q] : a.terms()) {
    Rational mag = rational_abs(q);
    if (mag > best) best = std::move(mag);
  }
  return best;
}

namespace {

struct Token {
  enum class Kind { Plus, Minus, RationalLit, Name } kind;
  std::string text;
  std::size_t column = 0;  // 1-based position of the token in the input
};

bool looks_like_rational(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  return digits > 0 && i == s.size();
}

bool looks_like_name(const std::string& s) {
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

std::vector<Token> tokenize_expression(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::string piece(text.substr(start, i - start));
    Token tok;
    tok.column = start + 1;
    if (piece == "+") {
      tok.kind = Token::Kind::Plus;
    } else if (piece == "-") {
      tok.kind = Token::Kind::Minus;
    } else if (looks_like_rational(piece)) {
      tok.kind = Token::Kind::RationalLit;
    } else if (looks_like_name(piece)) {
      tok.kind = Token::Kind::Name;
    } else {
      throw ParseError("unrecognized token '" + piece + "' at column " +
                       std::to_string(start + 1));
    }
    tok.text = std::move(piece);
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

}  // namespace

TermMap parse_terms(std::string_view text,
                    const std::map<std::string, int>& name_table) {
  const std::vector<Token> tokens = tokenize_expression(text);
  if (tokens.empty()) {
    throw ParseError("empty element expression");
  }

  TermMap raw;
  std::size_t i = 0;
  bool first = true;
  while (i < tokens.size() || first) {
    Rational sign(1);
    if (!first) {
      if (tokens[i].kind == Token::Kind::Plus) {
        sign = 1;
      } else if (tokens[i].kind == Token::Kind::Minus) {
        sign = -1;
      } else {
        throw ParseError("expected '+' or '-' before '" + tokens[i].text +
                         "' at column " + std::to_string(tokens[i].column));
      }
      ++i;
      if (i == tokens.size()) {
        throw ParseError("dangling sign at end of expression");
      }
    }

    Rational coeff(1);
    bool saw_anything = false;
    if (i < tokens.size() && tokens[i].kind == Token::Kind::RationalLit) {
      coeff = parse_rational(tokens[i].text);
      ++i;
      saw_anything = true;
    }
    Word w;
    while (i < tokens.size() && tokens[i].kind == Token::Kind::Name) {
      auto it = name_table.find(tokens[i].text);
      if (it == name_table.end()) {
        throw ParseError("unknown generator '" + tokens[i].text +
                         "' at column " + std::to_string(tokens[i].column));
      }
      w.push_back(it->second);
      ++i;
      saw_anything = true;
    }
    if (!saw_anything) {
      throw ParseError("empty term at column " +
                       std::to_string(tokens[i].column));
    }
    Rational q = sign * coeff;
    add_term(raw, w, q);
    first = false;
    if (i == tokens.size()) break;
  }
  return raw;
}

Element parse_element(std::string_view text, const PresentationPtr& p) {
  require_presentation(p);
  const std::map<std::string, int> table = make_name_table(p->generators());
  return Element::from_terms(p, parse_terms(text, table));
}

namespace {

// One monomial with a non-negative coefficient, in grammar form.
std::string format_term(const Rational& coeff, const std::string& word,
                        bool force_coeff) {
  if (word.empty()) return to_string(coeff);
  if (coeff == 1 && !force_coeff) return word;
  return to_string(coeff) + " " + word;
}

}  // namespace

std::string to_expression_string(const Element& a) {
  if (a.is_zero()) return "0";
  const Presentation& p = *a.presentation();
  std::string out;
  bool first = true;
  for (const auto& [w, q] : a.terms()) {
    const std::string word = w.empty() ? std::string() : p.word_to_string(w);
    if (first) {
      // The leading sign must ride on the rational literal ("-1 x", "-2"),
      // since the grammar has no unary minus.
      if (q < 0) {
        out += format_term(q, word, /*force_coeff=*/true);
      } else {
        out += format_term(q, word, /*force_coeff=*/false);
      }
      first = false;
      continue;
    }
    if (q < 0) {
      out += " - " + format_term(Rational(-q), word, /*force_coeff=*/false);
    } else {
      out += " + " + format_term(q, word, /*force_coeff=*/false);
    }
  }
  return out;
}

}  // namespace cda
