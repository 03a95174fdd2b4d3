#include "clasp/genusbound/lemma.hpp"

#include "clasp/error.hpp"

namespace clasp {

FpVector constant_coordinate_vector(const FpMatrix& basis, int v) {
  const int p = basis.p();
  if (mod_p(v, p) == 0) throw Error(ErrorKind::InvalidArgument, "constant value must be a nonzero residue");
  if (basis.rows() == 0) throw Error(ErrorKind::InvalidBasis, "basis has no rows");

  // The reduced form is the identity on the pivot columns (a nonsingular
  // k x k submatrix), so the row sum is 1 there.
  const RrefResult red = rref(basis);
  if (red.pivots.size() != basis.rows()) throw Error(ErrorKind::InvalidBasis, "basis rows are linearly dependent");

  FpVector sum(p, basis.cols());
  for (std::size_t i = 0; i < red.matrix.rows(); ++i) sum += red.matrix.row(i);
  return sum.scaled(mod_p(v, p));
}

FpVector constant_coordinate_vector(const EchelonBasis& basis, int v) {
  return constant_coordinate_vector(basis.matrix(), v);
}

}  // namespace clasp
