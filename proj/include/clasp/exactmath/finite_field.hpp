#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "clasp/exactmath/int_matrix.hpp"

namespace clasp {

bool is_prime(std::int64_t n);
/// Throws Error{InadmissiblePrime} unless p is an odd prime small enough
/// for products of residues to fit in 64 bits.
void require_odd_prime(std::int64_t p);

/// Least non-negative residue of v mod p.
int mod_p(std::int64_t v, int p);
int mod_p(const BigInt& v, int p);
/// Inverse of a nonzero residue. Throws Error{InvalidArgument} on zero.
int inv_mod(int a, int p);

/// Element of (F_p)^n; entries always stored in {0, ..., p-1}.
class FpVector {
 public:
  FpVector(int p, std::size_t n);
  FpVector(int p, std::vector<int> entries);  // reduces entries mod p

  int p() const { return p_; }
  std::size_t size() const { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i]; }
  void set(std::size_t i, std::int64_t value) { v_[i] = mod_p(value, p_); }
  std::span<const int> entries() const { return v_; }

  bool is_zero() const;
  FpVector scaled(int c) const;
  FpVector& operator+=(const FpVector& o);

  friend FpVector operator+(FpVector a, const FpVector& b) { return a += b; }
  friend bool operator==(const FpVector&, const FpVector&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FpVector& v);

 private:
  int p_;
  std::vector<int> v_;
};

/// Dense matrix over F_p. Zero rows is allowed (the zero subspace).
class FpMatrix {
 public:
  FpMatrix(int p, std::size_t rows, std::size_t cols);
  FpMatrix(int p, std::initializer_list<std::initializer_list<long>> rows);
  static FpMatrix from_rows(int p, std::size_t cols, std::span<const FpVector> rows);
  static FpMatrix reduce(const IntMatrix& a, int p);

  int p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) { data_[i * cols_ + j] = mod_p(v, p_); }

  FpVector row(std::size_t i) const;
  FpVector multiply(const FpVector& x) const;  // this * x
  /// Linear combination sum_i coeffs[i] * row(i).
  FpVector combine(std::span<const int> coeffs) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FpMatrix& m);

 private:
  int p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<int> data_;
};

struct RrefResult {
  FpMatrix matrix;                   // reduced row-echelon, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

RrefResult rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);
bool in_row_span(const FpMatrix& rows, const FpVector& v);

/// Basis of {x : A x == 0 mod p}, one vector per free column of rref(A),
/// with that free coordinate set to 1. Empty when the kernel is trivial.
std::vector<FpVector> fp_kernel(const IntMatrix& a, int p);

}  // namespace clasp
