#pragma once

#include <string>

#include "opnlab/rational.hpp"

namespace opnlab {

// Closed interval [lo, hi] certified to contain some real constant.
class RatInterval {
 public:
  // Throws InvalidArgument unless lo <= hi.
  RatInterval(Rational lo, Rational hi);
  static RatInterval point(const Rational& q) { return {q, q}; }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
  bool contains(const RatInterval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool overlaps(const RatInterval& other) const {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }

  std::string to_string() const;

  friend bool operator==(const RatInterval&, const RatInterval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

enum class Ordering3 { Below, Above, Indeterminate };

const char* to_string(Ordering3 o);

// Both operands need lo > 0; otherwise NonPositiveInterval.
RatInterval interval_mul(const RatInterval& a, const RatInterval& b);

// c / b for c > 0 and b.lo > 0.
RatInterval interval_div_scalar(const Rational& c, const RatInterval& b);

// Intersection of two enclosures of the same constant. Throws
// InvalidArgument when they are disjoint.
RatInterval intersect(const RatInterval& a, const RatInterval& b);

Ordering3 compare(const Rational& q, const RatInterval& interval);

}  // namespace opnlab
