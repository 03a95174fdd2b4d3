#pragma once

#include <vector>

#include "clasp/exactmath/int_matrix.hpp"

namespace clasp {

/// u * A * w == diag(d) (padded with zeros to A's shape), with u, w
/// unimodular and d[i] | d[i+1], all d[i] >= 0.
struct SnfResult {
  std::vector<BigInt> d;
  IntMatrix u;
  IntMatrix w;
};

/// Smith normal form by deterministic Euclidean pivoting.
SnfResult snf(const IntMatrix& a);

/// The rows x cols matrix with `d` on the diagonal.
IntMatrix diagonal_matrix(const std::vector<BigInt>& d, std::size_t rows, std::size_t cols);

}  // namespace clasp
