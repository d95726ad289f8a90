#include "opnlab/rational.hpp"

#include <cctype>
#include <utility>

#include "opnlab/errors.hpp"

namespace opnlab {

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_signed = [](std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    Integer v = parse_natural(s);
    return negative ? Integer(-v) : v;
  };
  if (slash == std::string_view::npos) return Rational(parse_signed(text));
  const Integer num = parse_signed(text.substr(0, slash));
  const Integer den = parse_natural(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational Rational::reciprocal() const {
  if (sign() == 0) throw InvalidArgument("reciprocal of zero");
  return Rational(value_.get_den(), value_.get_num());
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ + b.value_));
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ - b.value_));
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ * b.value_));
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw InvalidArgument("division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}
Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational rat_add(const Rational& a, const Rational& b) { return a + b; }
Rational rat_mul(const Rational& a, const Rational& b) { return a * b; }

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
  return Rational(pow(base.numerator(), exponent),
                  pow(base.denominator(), exponent));
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.numerator().get_mpz_t(),
             q.denominator().get_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.numerator().get_mpz_t(),
             q.denominator().get_mpz_t());
  return r;
}

std::string to_string(const Integer& n) { return n.get_str(); }

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw ParseError("expected a decimal integer");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("not a decimal integer: '" + std::string(text) + "'");
    }
  }
  return Natural(std::string(text), 10);
}

}  // namespace opnlab
