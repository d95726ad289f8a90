#include "opnlab/text.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

#include "opnlab/errors.hpp"

namespace opnlab {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

unsigned parse_exponent(std::string_view text) {
  const Natural e = parse_natural(text);
  if (e == 0) throw ParseError("exponent must be >= 1");
  if (!e.fits_uint_p()) throw ParseError("exponent too large: " + std::string(text));
  return static_cast<unsigned>(e.get_ui());
}

}  // namespace

Factorization parse_factorization(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty factorization");
  if (s.find_first_of("*^") == std::string::npos) {
    return factorize(parse_natural(s));
  }

  std::map<Natural, unsigned> merged;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = std::min(s.find('*', start), s.size());
    const std::string_view token = std::string_view(s).substr(start, end - start);
    if (token.empty()) throw ParseError("empty factor in '" + s + "'");
    const std::size_t caret = token.find('^');
    const Natural base = parse_natural(token.substr(0, caret));
    const unsigned exponent =
        caret == std::string_view::npos ? 1 : parse_exponent(token.substr(caret + 1));
    if (!is_prime(base)) throw InvalidArgument(base.get_str() + " is not prime");
    merged[base] += exponent;
    if (end == s.size()) break;
    start = end + 1;
  }
  std::vector<PrimePower> factors;
  for (auto& [p, e] : merged) factors.push_back({p, e});
  return Factorization(std::move(factors));
}

Rational parse_decimal(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.find('/') != std::string::npos) return Rational::parse(s);

  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool any_digit = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    digits += s[i];
    any_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    for (++i; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      digits += s[i];
      --scale;
      any_digit = true;
    }
  }
  if (!any_digit) throw ParseError("not a decimal number: '" + s + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) exp_negative = s[i++] == '-';
    const Natural e = parse_natural(std::string_view(s).substr(i));
    if (!e.fits_slong_p() || e > 100000) throw ParseError("exponent out of range");
    scale += exp_negative ? -e.get_si() : e.get_si();
    i = s.size();
  }
  if (i != s.size()) throw ParseError("trailing characters in '" + s + "'");

  Rational value(Natural(digits, 10));
  const Integer ten_pow = pow(Integer(10), static_cast<unsigned long>(scale < 0 ? -scale : scale));
  value = scale < 0 ? value / Rational(ten_pow) : value * Rational(ten_pow);
  return negative ? -value : value;
}

std::string to_decimal(const Rational& q, unsigned digits, Rounding rounding) {
  const Rational scaled = q * Rational(pow(Integer(10), digits));
  Integer units;
  switch (rounding) {
    case Rounding::Down: units = floor(scaled); break;
    case Rounding::Up: units = ceil(scaled); break;
    case Rounding::TowardZero:
      units = scaled.sign() < 0 ? ceil(scaled) : floor(scaled);
      break;
  }
  const bool negative = units < 0;
  std::string body = Integer(abs(units)).get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  if (digits > 0) body.insert(body.size() - digits, ".");
  return negative ? "-" + body : body;
}

unsigned decimal_places_for(const Rational& width) {
  if (width.sign() <= 0) throw InvalidArgument("width must be > 0");
  unsigned d = 0;
  Rational step(1);
  const Rational tenth(Integer(1), Integer(10));
  while (step > width) {
    step *= tenth;
    ++d;
  }
  return d;
}

}  // namespace opnlab
