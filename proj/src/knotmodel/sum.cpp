#include "clasp/knotmodel/sum.hpp"

#include "clasp/error.hpp"
#include "clasp/exactmath/finite_field.hpp"
#include "clasp/knotmodel/seifert.hpp"

namespace clasp {

ChainPresentation Summand::chain() const {
  ChainPresentation c = chain_presentation(knot);
  return mirrored ? clasp::mirror(c) : c;
}

std::string Summand::name() const { return mirrored ? "-" + knot.name() : knot.name(); }

Rat Summand::linking_value(std::int64_t x, std::int64_t y) const {
  Rat v = clasp::linking_value(knot, x, y);
  return mirrored ? (-v).frac() : v;
}

Summand make_summand(std::int64_t a, std::int64_t signed_b) {
  if (signed_b == 0) throw Error(ErrorKind::InvalidKnot, "summand b must be nonzero");
  const bool mirrored = signed_b < 0;
  return Summand{two_bridge(a, mirrored ? -signed_b : signed_b), mirrored};
}

Summand mirror(const Summand& s) { return Summand{s.knot, !s.mirrored}; }

Rat p_torsion_linking(const Summand& s, int p) {
  const std::int64_t n = s.knot.a / p;
  return s.linking_value(n, n);
}

SumSpec::SumSpec(std::vector<Summand> summands, int p) : summands_(std::move(summands)), p_(p) {
  require_odd_prime(p);
  for (const auto& s : summands_) {
    (void)chain_presentation(s.knot);
    if (!p_torsion_admissible(s.knot, p)) {
      throw Error(ErrorKind::InadmissiblePrime,
                  s.name() + ": p = " + std::to_string(p) + " must divide a = " + std::to_string(s.knot.a) +
                      " exactly once");
    }
  }
}

int classical_signature(const SumSpec& s) {
  int total = 0;
  for (const auto& summand : s.summands()) total += classical_signature(seifert_from_chain(summand.chain()));
  return total;
}

SumSpec mirror(const SumSpec& s) {
  std::vector<Summand> flipped;
  flipped.reserve(s.size());
  for (const auto& summand : s.summands()) flipped.push_back(mirror(summand));
  return SumSpec(std::move(flipped), s.p());
}

}  // namespace clasp
