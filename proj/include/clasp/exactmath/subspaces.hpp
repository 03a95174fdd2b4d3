#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "clasp/exactmath/finite_field.hpp"

namespace clasp {

/// A d-dimensional subspace of (F_p)^n held as its unique reduced
/// row-echelon basis (d x n, pivots strictly increasing, pivot entries 1,
/// zeros above and below every pivot).
class EchelonBasis {
 public:
  /// Validates the echelon invariants; throws Error{InvalidBasis}.
  explicit EchelonBasis(FpMatrix rows);
  /// The zero subspace of (F_p)^n.
  static EchelonBasis zero(int p, std::size_t n);
  /// Echelon basis of the row span of an arbitrary matrix.
  static EchelonBasis span_of(const FpMatrix& m);

  int p() const { return rows_.p(); }
  std::size_t ambient_dim() const { return rows_.cols(); }
  std::size_t dim() const { return rows_.rows(); }
  const FpMatrix& matrix() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const FpVector& v) const;

  friend bool operator==(const EchelonBasis& a, const EchelonBasis& b) { return a.rows_ == b.rows_; }

 private:
  FpMatrix rows_;
  std::vector<std::size_t> pivots_;
};

/// Pull-based enumeration of every d-dimensional subspace of (F_p)^n,
/// ordered by pivot set (lexicographic), then by free entries
/// (lexicographic, row-major, first entry most significant).
class SubspaceStream {
 public:
  /// Throws Error{InvalidDimension} if d > n.
  SubspaceStream(std::size_t n, std::size_t d, int p);

  /// Restricts the stream to subspaces with exactly this pivot set, so
  /// disjoint pivot sets can be walked independently.
  static SubspaceStream with_pivots(std::size_t n, std::vector<std::size_t> pivots, int p);

  std::optional<EchelonBasis> next();

 private:
  SubspaceStream(std::size_t n, std::size_t d, int p, bool single_cell);
  void load_cell();
  bool advance_free();
  bool advance_pivots();

  std::size_t n_;
  std::size_t d_;
  int p_;
  bool single_cell_ = false;
  bool done_ = false;
  std::vector<std::size_t> pivots_;
  std::vector<std::pair<std::size_t, std::size_t>> free_;  // (row, col)
  std::vector<int> values_;
};

/// Number of d-dimensional subspaces of (F_p)^n, by the product formula.
BigInt gaussian_binomial(std::size_t n, std::size_t d, int p);

}  // namespace clasp
