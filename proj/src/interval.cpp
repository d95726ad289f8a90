#include "opnlab/interval.hpp"

#include <algorithm>
#include <utility>

#include "opnlab/errors.hpp"

namespace opnlab {

RatInterval::RatInterval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) {
    throw InvalidArgument("interval with lo > hi: " + to_string());
  }
}

std::string RatInterval::to_string() const {
  return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
}

const char* to_string(Ordering3 o) {
  switch (o) {
    case Ordering3::Below: return "Below";
    case Ordering3::Above: return "Above";
    case Ordering3::Indeterminate: return "Indeterminate";
  }
  return "?";
}

RatInterval interval_mul(const RatInterval& a, const RatInterval& b) {
  if (a.lo().sign() <= 0 || b.lo().sign() <= 0) {
    throw NonPositiveInterval("interval_mul needs positive operands");
  }
  return {a.lo() * b.lo(), a.hi() * b.hi()};
}

RatInterval interval_div_scalar(const Rational& c, const RatInterval& b) {
  if (b.lo().sign() <= 0) {
    throw NonPositiveInterval("interval_div_scalar needs a positive divisor");
  }
  if (c.sign() <= 0) {
    throw InvalidArgument("interval_div_scalar needs a positive numerator");
  }
  return {c / b.hi(), c / b.lo()};
}

RatInterval intersect(const RatInterval& a, const RatInterval& b) {
  if (!a.overlaps(b)) {
    throw InvalidArgument("disjoint enclosures " + a.to_string() + " and " +
                          b.to_string());
  }
  return {std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

Ordering3 compare(const Rational& q, const RatInterval& interval) {
  if (q < interval.lo()) return Ordering3::Below;
  if (q > interval.hi()) return Ordering3::Above;
  return Ordering3::Indeterminate;
}

}  // namespace opnlab
