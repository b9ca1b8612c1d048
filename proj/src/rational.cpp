#include "cda/rational.hpp"

#include <cctype>

#include "cda/errors.hpp"

namespace cda {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto fail = [&]() -> void {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  };

  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  std::string_view num = body;
  std::string_view den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!all_digits(den)) fail();
  }
  if (!all_digits(num)) fail();

  Integer n{std::string(num)};
  Integer d = den.empty() ? Integer(1) : Integer(std::string(den));
  if (d == 0) {
    throw ParseError("zero denominator in rational: '" + std::string(text) +
                     "'");
  }
  Rational q(n, d);
  if (negative) q = -q;
  return q;
}

std::string to_string(const Rational& q) {
  const Integer num = numerator(q);
  const Integer den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace cda
