#pragma once

#include <cstdint>

#include "clasp/cassongordon/casson_gordon.hpp"
#include "clasp/genusbound/certificate.hpp"

namespace clasp {

/// Bounds from one summand's table for n-fold sums of it. In the chosen
/// orientation (values multiplied by `orientation`), chi_{r_m} certifies
/// sigma_1 tau <= -b_minus and every character certifies <= b_plus; then
/// n <= c * g4 with c = 2 (4 + B- + B+) / (B- - B+).
struct LinearCoefficient {
  Rat c;
  int r_m = 0;
  Rat b_minus;
  Rat b_plus;
  int orientation = 1;
};

/// Evaluates both orientations and returns the smaller valid c.
/// Throws Error{NoLinearBound} if B- <= B+ in both.
LinearCoefficient linear_coefficient(const CgTable& t);

/// Certificate for g4 >= ceil(n / c) on the n-fold sum of t.summand, capped
/// at floor(n/2) + 1. Throws Error{HypothesisViolation} for odd or negative n.
BoundCertificate linear_bound(std::int64_t n, const CgTable& t);

}  // namespace clasp
