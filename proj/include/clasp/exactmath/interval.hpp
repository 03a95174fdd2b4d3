#pragma once

#include <iosfwd>
#include <span>

#include "clasp/exactmath/rational.hpp"

namespace clasp {

/// Closed interval [lo, hi] with exact rational endpoints.
class RatInterval {
 public:
  RatInterval() = default;
  /// Throws Error{InvalidArgument} if lo > hi.
  RatInterval(Rat lo, Rat hi);
  static RatInterval point(const Rat& x) { return RatInterval(x, x); }

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Rat width() const { return hi_ - lo_; }
  bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }
  /// max |x| over the interval
  Rat magnitude() const { return max(lo_.abs(), hi_.abs()); }

  RatInterval operator-() const { return RatInterval(-hi_, -lo_); }
  RatInterval& operator+=(const RatInterval& o);
  friend RatInterval operator+(RatInterval a, const RatInterval& b) { return a += b; }
  friend bool operator==(const RatInterval&, const RatInterval&) = default;
  friend std::ostream& operator<<(std::ostream& os, const RatInterval& i);

 private:
  Rat lo_;
  Rat hi_;
};

/// [sum of lo, sum of hi]; the empty sum is [0, 0].
RatInterval interval_sum(std::span<const RatInterval> items);

/// True iff every x in `interval` has |x| > t. Requires t >= 0
/// (Error{InvalidArgument} otherwise).
bool certified_abs_exceeds(const RatInterval& interval, const Rat& t);

}  // namespace clasp
