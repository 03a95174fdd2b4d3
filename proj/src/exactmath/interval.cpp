#include "clasp/exactmath/interval.hpp"

#include <ostream>

#include "clasp/error.hpp"

namespace clasp {

RatInterval::RatInterval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw Error(ErrorKind::InvalidArgument, "interval with lo > hi");
}

RatInterval& RatInterval::operator+=(const RatInterval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const RatInterval& i) {
  return os << '[' << i.lo_ << ", " << i.hi_ << ']';
}

RatInterval interval_sum(std::span<const RatInterval> items) {
  RatInterval acc;
  for (const auto& it : items) acc += it;
  return acc;
}

bool certified_abs_exceeds(const RatInterval& interval, const Rat& t) {
  if (t.sign() < 0) throw Error(ErrorKind::InvalidArgument, "threshold must be non-negative");
  return interval.lo() > t || interval.hi() < -t;
}

}  // namespace clasp
