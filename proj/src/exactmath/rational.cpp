#include "clasp/exactmath/rational.hpp"

#include <climits>
#include <ostream>

#include "clasp/error.hpp"

namespace clasp {

BigInt to_big(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return BigInt(static_cast<long>(v));
}

std::int64_t to_i64(const BigInt& v) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (!v.fits_slong_p()) throw Error(ErrorKind::OutOfRange, "integer " + v.get_str() + " does not fit in 64 bits");
  return v.get_si();
}

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') return false;
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rat::Rat(std::int64_t n) : value_(to_big(n)) {}

Rat::Rat(std::int64_t n, std::int64_t d) : Rat(to_big(n), to_big(d)) {}

Rat::Rat(const BigInt& n) : value_(n) {}

Rat::Rat(const BigInt& n, const BigInt& d) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  BigInt n;
  BigInt d = 1;
  auto slash = text.find('/');
  bool ok = slash == std::string_view::npos
                ? parse_integer(text, n)
                : parse_integer(text.substr(0, slash), n) &&
                      parse_integer(text.substr(slash + 1), d);
  if (!ok) throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rat(n, d);
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(value_))); }

BigInt Rat::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rat::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rat Rat::frac() const { return *this - Rat(floor()); }

std::string Rat::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

Rat& Rat::operator+=(const Rat& o) {
  value_ += o.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  value_ -= o.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  value_ *= o.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace clasp
