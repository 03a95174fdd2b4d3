#include "clasp/exactmath/int_matrix.hpp"

#include <ostream>
#include <string>
#include <utility>

#include "clasp/error.hpp"

namespace clasp {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorKind::InvalidDimension, "matrix dimensions must be positive");
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::InvalidDimension, "ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) data_[i * cols_ + j++] = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigInt& IntMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw Error(ErrorKind::OutOfRange, "matrix index out of range");
  return (*this)(i, j);
}

const BigInt& IntMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw Error(ErrorKind::OutOfRange, "matrix index out of range");
  return (*this)(i, j);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r = *this;
  for (auto& v : r.data_) v = -v;
  return r;
}

BigInt IntMatrix::det() const {
  if (!is_square()) throw Error(ErrorKind::InvalidDimension, "determinant of non-square matrix");
  IntMatrix a = *this;
  const std::size_t n = rows_;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorKind::InvalidDimension, "matrix sum dimension mismatch");
  }
  IntMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidDimension, "matrix product dimension mismatch");
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << ']';
  }
  return os << ']';
}

int symmetric_signature(const IntMatrix& m) {
  if (!m.is_square() || !(m == m.transpose())) {
    throw Error(ErrorKind::InvalidArgument, "signature requires a symmetric matrix");
  }
  const std::size_t n = m.rows();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));

  // Simultaneous row/column operations keep the form congruent.
  auto add = [&](std::size_t dst, std::size_t src, const Rat& f) {
    for (std::size_t j = 0; j < n; ++j) a[dst][j] += f * a[src][j];
    for (std::size_t i = 0; i < n; ++i) a[i][dst] += f * a[i][src];
  };
  auto swap = [&](std::size_t x, std::size_t y) {
    std::swap(a[x], a[y]);
    for (std::size_t i = 0; i < n; ++i) std::swap(a[i][x], a[i][y]);
  };

  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t j = k + 1;
      while (j < n && a[j][j].is_zero()) ++j;
      if (j < n) {
        swap(k, j);
      } else {
        j = k + 1;
        while (j < n && a[k][j].is_zero()) ++j;
        if (j == n) throw Error(ErrorKind::DegenerateForm, "singular symmetric form");
        // a[j][j] == 0 here, so the new pivot is 2 a[k][j] != 0.
        add(k, j, Rat(1));
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      add(i, k, -(a[i][k] / a[k][k]));
    }
    sig += a[k][k].sign();
  }
  return sig;
}

}  // namespace clasp
