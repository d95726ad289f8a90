#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace opnlab {

// Arbitrary-size integers. `Natural` marks places where only values >= 0
// are meaningful; both are backed by GMP.
using Integer = mpz_class;
using Natural = mpz_class;

// Exact fraction kept in canonical form: gcd(|num|, den) == 1, den > 0.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : value_(value) {}
  // Throws InvalidArgument when `denominator` is zero.
  Rational(const Integer& numerator, const Integer& denominator);

  // Accepts "a", "a/b" and "-a/b" in decimal.
  static Rational parse(std::string_view text);

  const Integer& numerator() const { return value_.get_num(); }
  const Integer& denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational reciprocal() const;

  // Always "num/den", including "2/1" and "0/1".
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class value);

  mpq_class value_;
};

Rational rat_add(const Rational& a, const Rational& b);
Rational rat_mul(const Rational& a, const Rational& b);

Rational pow(const Rational& base, unsigned long exponent);
Integer pow(const Integer& base, unsigned long exponent);

// floor(q) for any sign.
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

std::string to_string(const Integer& n);

// Parses a non-negative decimal integer. Throws ParseError.
Natural parse_natural(std::string_view text);

}  // namespace opnlab
