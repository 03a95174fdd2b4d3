#include "clasp/genusbound/linear.hpp"

#include <string>

#include "clasp/error.hpp"
#include "clasp/genusbound/obstruction.hpp"
#include "clasp/version.hpp"

namespace clasp {

namespace {

std::optional<LinearCoefficient> oriented(const CgTable& t, int orientation) {
  LinearCoefficient out;
  out.orientation = orientation;
  Rat b_minus;
  Rat b_plus(0);  // the trivial character certifies sigma_1 tau = 0
  for (int r = 1; r < t.p; ++r) {
    const Rat hi = t[r] * Rat(orientation) + 1;
    if (out.r_m == 0 || -hi > b_minus) {
      b_minus = -hi;
      out.r_m = r;
    }
    b_plus = max(b_plus, hi);
  }
  if (b_minus <= b_plus) return std::nullopt;
  out.b_minus = b_minus;
  out.b_plus = b_plus;
  out.c = Rat(2) * (Rat(4) + b_minus + b_plus) / (b_minus - b_plus);
  return out;
}

}  // namespace

LinearCoefficient linear_coefficient(const CgTable& t) {
  if (t.p < 3 || t.values.size() != static_cast<std::size_t>(t.p)) {
    throw Error(ErrorKind::InvalidArgument, "table is incomplete");
  }
  const auto pos = oriented(t, 1);
  const auto neg = oriented(t, -1);
  if (pos && neg) return neg->c < pos->c ? *neg : *pos;
  if (pos) return *pos;
  if (neg) return *neg;
  throw Error(ErrorKind::NoLinearBound,
              t.summand.name() + ": no character separates the certified intervals (B- <= B+ in both orientations)");
}

BoundCertificate linear_bound(std::int64_t n, const CgTable& t) {
  if (n < 0 || n % 2 != 0) {
    throw Error(ErrorKind::HypothesisViolation, "hypothesis \"n is even\" violated: n = " + std::to_string(n));
  }
  const LinearCoefficient lc = linear_coefficient(t);
  require_signature_zero(SumSpec({t.summand}, t.p));

  const Rat bound = Rat(n) / lc.c;
  BigInt g_lower = bound.ceil();
  const BigInt cap = to_big(n / 2 + 1);
  if (g_lower > cap) g_lower = cap;

  LinearWitness w;
  w.n = n;
  w.orientation = lc.orientation;
  w.r_m = lc.r_m;
  w.b_minus = lc.b_minus;
  w.b_plus = lc.b_plus;
  w.c = lc.c;
  const int top = static_cast<int>(to_i64(g_lower));
  for (int g = 0; g < top; ++g) {
    const std::int64_t k = n / 2 - g;
    const Rat lhs = Rat(k) * lc.b_minus - Rat(n - k) * lc.b_plus;
    if (lhs <= Rat(4 * static_cast<std::int64_t>(g))) {
      throw Error(ErrorKind::NoLinearBound, "inequality fails at g = " + std::to_string(g));
    }
    w.steps.push_back(LinearStep{g, k, lhs});
  }

  BoundCertificate c;
  c.kind = CertificateKind::LinearEx2;
  c.p = t.p;
  c.summands.push_back(SummandData{t.summand.knot.a, t.summand.signed_b(), t.values, p_torsion_linking(t.summand, t.p)});
  c.g_lower = top;
  c.signature_zero = true;
  c.half_rank = true;
  c.witnesses = std::move(w);
  c.library_version = kLibraryVersion;
  return c;
}

}  // namespace clasp
