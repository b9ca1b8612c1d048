#include "cda/cdga.hpp"

#include <set>

#include "cda/errors.hpp"

namespace cda {

TestSet spanning_test_set(const PresentationPtr& p, int max_word_len) {
  if (!p) throw ValidationError("null presentation");
  if (max_word_len < 1) {
    throw ValidationError("test-set word length must be >= 1");
  }
  const std::size_t limit = p->config().max_test_words;
  const int gens = static_cast<int>(p->generator_count());

  TestSet ts;
  ts.max_word_len = max_word_len;
  std::set<Element, ElementLess> seen;
  std::size_t enumerated = 0;

  // Words in length-lex order: lengths ascending, each length swept as an
  // odometer over generator ids.
  for (int len = 0; len <= max_word_len; ++len) {
    if (len > 0 && gens == 0) break;
    Word w(static_cast<std::size_t>(len), 0);
    while (true) {
      if (++enumerated > limit) {
        throw GuardError("test-set enumeration exceeded " +
                         std::to_string(limit) + " words; lower the length");
      }
      Element e = Element::from_word(p, w);
      if (!e.is_zero() && seen.insert(e).second) {
        ts.elements.push_back(std::move(e));
      }
      // Advance the odometer.
      int pos = len - 1;
      while (pos >= 0 && w[static_cast<std::size_t>(pos)] == gens - 1) {
        w[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++w[static_cast<std::size_t>(pos)];
    }
  }
  return ts;
}

Element iterate_d(const CurvedDGA& dga, int k, const Element& a) {
  if (k < 0) throw ValidationError("iteration count must be >= 0");
  Element cur = a;
  for (int i = 0; i < k; ++i) cur = dga.d.apply(cur);
  return cur;
}

Element normal_form_power(const CurvedDGA& dga, int k, const Element& a) {
  if (k < 0) throw ValidationError("iteration count must be >= 0");
  Element cur = (k % 2 == 1) ? dga.d.apply(a) : a;
  const LinearOperator adc = dga.ad_c();
  for (int i = 0; i < k / 2; ++i) cur = adc.apply(cur);
  return cur;
}

Element binomial_ad_power(const Element& c, int r, const Element& a) {
  if (r < 0) throw ValidationError("binomial exponent must be >= 0");
  if (!c.is_zero()) {
    const std::optional<int> deg = c.homogeneous_degree();
    if (!deg) {
      throw ValidationError(
          "binomial expansion needs a homogeneous curvature");
    }
    if (*deg % 2 != 0) {
      throw ValidationError(
          "binomial expansion is invalid for odd-degree curvature (degree " +
          std::to_string(*deg) + ")");
    }
  }

  std::vector<Element> c_pow;
  c_pow.reserve(static_cast<std::size_t>(r) + 1);
  c_pow.push_back(Element::unit(c.presentation()));
  for (int j = 1; j <= r; ++j) c_pow.push_back(c_pow.back() * c);

  Element acc = Element::zero(c.presentation());
  Integer binom(1);  // C(r, j), updated incrementally
  for (int j = 0; j <= r; ++j) {
    Rational coeff{binom};
    if (j % 2 != 0) coeff = -coeff;
    acc = acc + coeff * (c_pow[static_cast<std::size_t>(r - j)] * a *
                         c_pow[static_cast<std::size_t>(j)]);
    binom = binom * (r - j) / (j + 1);
  }
  return acc;
}

}  // namespace cda
