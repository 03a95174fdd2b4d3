#pragma once

#include <cstdint>
#include <string>

#include "clasp/exactmath/int_matrix.hpp"
#include "clasp/exactmath/rational.hpp"

namespace clasp {

/// Two-bridge knot B(a, b): a odd, 0 < b < a, gcd(a, b) = 1. Its double
/// branched cover is the lens space L(a, b).
struct TwoBridgeKnot {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::string label;

  /// label if set, else "B(a,b)"
  std::string name() const;

  friend bool operator==(const TwoBridgeKnot& x, const TwoBridgeKnot& y) { return x.a == y.a && x.b == y.b; }
};

/// Validates and normalises b into (0, a).
/// Throws Error{InvalidKnot} for even a, a < 3, or gcd(a, b) != 1.
TwoBridgeKnot two_bridge(std::int64_t a, std::int64_t b, std::string label = {});

/// Surgery description of L(a, b) on a two-component chain:
/// a/b = c1 + 1/c2 and linking matrix [[c1, 1], [1, -c2]]. A mirrored
/// presentation stores the negated matrix.
class ChainPresentation {
 public:
  ChainPresentation(std::int64_t c1, std::int64_t c2, bool mirrored = false);

  std::int64_t c1() const { return c1_; }
  std::int64_t c2() const { return c2_; }
  bool mirrored() const { return mirrored_; }
  const IntMatrix& lambda() const { return lambda_; }

  friend bool operator==(const ChainPresentation& x, const ChainPresentation& y) {
    return x.c1_ == y.c1_ && x.c2_ == y.c2_ && x.mirrored_ == y.mirrored_;
  }

 private:
  std::int64_t c1_;
  std::int64_t c2_;
  bool mirrored_;
  IntMatrix lambda_;
};

/// Requires a == 1 (mod b); otherwise Error{UnsupportedPresentation}
/// (longer continued fractions are not modelled).
ChainPresentation chain_presentation(const TwoBridgeKnot& k);

/// Orientation reversal: lambda -> -lambda.
ChainPresentation mirror(const ChainPresentation& p);

/// Order of H_1 of the double branched cover, i.e. |det lambda| = a.
/// Cross-checked against the Smith form of lambda, which must be (1, a).
std::int64_t double_cover_homology(const TwoBridgeKnot& k);

/// p | a and p^2 does not divide a, i.e. the p-primary part of H_1 is Z_p.
bool p_torsion_admissible(const TwoBridgeKnot& k, std::int64_t p);

/// Linking form b*x*y/a reduced into [0, 1).
Rat linking_value(const TwoBridgeKnot& k, std::int64_t x, std::int64_t y);

}  // namespace clasp
