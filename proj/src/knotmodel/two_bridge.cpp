#include "clasp/knotmodel/two_bridge.hpp"

#include <numeric>

#include "clasp/error.hpp"
#include "clasp/exactmath/snf.hpp"

namespace clasp {

std::string TwoBridgeKnot::name() const {
  if (!label.empty()) return label;
  return "B(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

TwoBridgeKnot two_bridge(std::int64_t a, std::int64_t b, std::string label) {
  const std::string what = "B(" + std::to_string(a) + "," + std::to_string(b) + ")";
  if (a < 3) throw Error(ErrorKind::InvalidKnot, what + ": a must be at least 3");
  if (a % 2 == 0) throw Error(ErrorKind::InvalidKnot, what + ": a is even, which gives a two-component link");
  std::int64_t nb = b % a;
  if (nb < 0) nb += a;
  if (std::gcd(a, nb) != 1) throw Error(ErrorKind::InvalidKnot, what + ": gcd(a, b) != 1");
  return TwoBridgeKnot{a, nb, std::move(label)};
}

ChainPresentation::ChainPresentation(std::int64_t c1, std::int64_t c2, bool mirrored)
    : c1_(c1), c2_(c2), mirrored_(mirrored), lambda_(2, 2) {
  const long s = mirrored ? -1 : 1;
  lambda_(0, 0) = to_big(c1) * s;
  lambda_(0, 1) = s;
  lambda_(1, 0) = s;
  lambda_(1, 1) = to_big(c2) * -s;
}

ChainPresentation chain_presentation(const TwoBridgeKnot& k) {
  if (k.b == 0 || (k.a - 1) % k.b != 0) {
    throw Error(ErrorKind::UnsupportedPresentation,
                k.name() + ": a is not 1 mod b, so there is no two-term chain presentation");
  }
  return ChainPresentation((k.a - 1) / k.b, k.b);
}

ChainPresentation mirror(const ChainPresentation& p) {
  return ChainPresentation(p.c1(), p.c2(), !p.mirrored());
}

std::int64_t double_cover_homology(const TwoBridgeKnot& k) {
  const ChainPresentation chain = chain_presentation(k);
  const BigInt det = ::abs(chain.lambda().det());
  const SnfResult s = snf(chain.lambda());
  if (det != k.a || s.d.size() != 2 || s.d[0] != 1 || s.d[1] != k.a) {
    throw Error(ErrorKind::InvalidArgument, k.name() + ": chain matrix does not present Z_a");
  }
  return k.a;
}

bool p_torsion_admissible(const TwoBridgeKnot& k, std::int64_t p) {
  if (p <= 1 || k.a % p != 0) return false;
  return (k.a / p) % p != 0;
}

Rat linking_value(const TwoBridgeKnot& k, std::int64_t x, std::int64_t y) {
  // reduce first so the product stays small
  const std::int64_t xr = x % k.a, yr = y % k.a;
  BigInt num = to_big(k.b) * to_big(xr) * to_big(yr);
  return Rat(num, to_big(k.a)).frac();
}

}  // namespace clasp
