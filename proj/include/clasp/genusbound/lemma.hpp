#pragma once

#include "clasp/exactmath/finite_field.hpp"
#include "clasp/exactmath/subspaces.hpp"

namespace clasp {

/// A vector in the row span of `basis` (k x n, rank k >= 1) with at least k
/// coordinates equal to the nonzero residue v: pick k independent columns,
/// row-reduce them to the identity, sum the rows and scale by v.
/// Throws Error{InvalidBasis} on rank deficiency or k = 0, and
/// Error{InvalidArgument} if v = 0 mod p.
FpVector constant_coordinate_vector(const FpMatrix& basis, int v);
FpVector constant_coordinate_vector(const EchelonBasis& basis, int v);

}  // namespace clasp
