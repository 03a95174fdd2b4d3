#pragma once

#include <cstdint>
#include <vector>

#include "clasp/genusbound/certificate.hpp"
#include "clasp/knotmodel/sum.hpp"

namespace clasp {

/// One greedy choice: C_j = B_m with m = 5k + 1. For j >= 2 the selection
/// inequality is lower > upper_before + 4j, with lower = sigma(C_j, chi_1) - 1
/// and upper_before the sum of sigma(C_i, chi_1) + 1 over i < j.
struct FamilyStep {
  int j = 0;
  std::int64_t k = 0;
  std::int64_t m = 0;
  Rat lower;
  Rat upper;
  Rat upper_before;
};

struct FamilyParams {
  int g = 0;
  int p = 5;
  std::vector<FamilyStep> steps;

  std::vector<std::int64_t> m_values() const;
  SumSpec sum() const;
};

/// 4g members chosen greedily: C_1 = B_1, then for each position the first
/// k in 0, 5, 10, ... past the previous choice satisfying the inequality.
/// Throws Error{InvalidArgument} for g < 1.
FamilyParams greedy_family(int g);

/// Recomputes every sigma from the chain formula and re-checks the
/// selection inequalities, the m = 5k + 1 shape with 5 | k, and
/// admissibility at p = 5.
bool replay_family(const FamilyParams& f);

/// Maximal-index argument: every candidate index a >= max(d, 1) of a
/// character in a d-dimensional subspace, d = ceil((n - 2g)/2), forces
/// |sigma_1 tau| > 4g, except a = 1 which may instead be excluded because the
/// first coordinate line is not isotropic. Certifies g4 >= g + 1.
/// Throws Error{FamilyNotCertifying} if some index fails,
/// Error{OutOfRange} if d = 0 or g < 0.
BoundCertificate analytic_certificate(const SumSpec& s, int g);
BoundCertificate analytic_certificate_ex1(const FamilyParams& f, int g);
BoundCertificate analytic_certificate_ex1(const std::vector<std::int64_t>& m_values, int g);

}  // namespace clasp
