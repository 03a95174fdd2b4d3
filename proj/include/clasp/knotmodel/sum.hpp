#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clasp/knotmodel/two_bridge.hpp"

namespace clasp {

/// One connected summand: a two-bridge knot, possibly mirrored. The mirror
/// of B(a, b) is written B(a, -b).
struct Summand {
  TwoBridgeKnot knot;
  bool mirrored = false;

  ChainPresentation chain() const;
  std::string name() const;
  /// Linking form of the summand's cover; mirroring negates it.
  Rat linking_value(std::int64_t x, std::int64_t y) const;
  /// Signed b as used in the [a, b] serialisation.
  std::int64_t signed_b() const { return mirrored ? -knot.b : knot.b; }

  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Parses the [a, b] convention: b < 0 means the mirror of B(a, |b|).
Summand make_summand(std::int64_t a, std::int64_t signed_b);
Summand mirror(const Summand& s);

/// Self-linking of the order-p generator (a/p) of the summand's cover
/// homology. Nonzero whenever the summand is p-admissible.
Rat p_torsion_linking(const Summand& s, int p);

/// Ordered connected sum of two-bridge summands together with the prime p
/// at which Casson-Gordon characters are taken. Every summand has a
/// two-term chain presentation and p exactly divides its determinant.
class SumSpec {
 public:
  /// Throws Error{InadmissiblePrime} / Error{UnsupportedPresentation}.
  SumSpec(std::vector<Summand> summands, int p);

  const std::vector<Summand>& summands() const { return summands_; }
  std::size_t size() const { return summands_.size(); }
  int p() const { return p_; }

 private:
  std::vector<Summand> summands_;
  int p_;
};

/// Sum of the summands' signatures via their chain Seifert forms.
/// Error{UnsupportedPresentation} when a summand's form is not modelled.
int classical_signature(const SumSpec& s);

SumSpec mirror(const SumSpec& s);

}  // namespace clasp
