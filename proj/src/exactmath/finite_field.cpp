#include "clasp/exactmath/finite_field.hpp"

#include <limits>
#include <ostream>
#include <string>
#include <utility>

#include "clasp/error.hpp"

namespace clasp {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

void require_odd_prime(std::int64_t p) {
  if (p <= 2 || p > std::numeric_limits<int>::max() || !is_prime(p)) {
    throw Error(ErrorKind::InadmissiblePrime, "p = " + std::to_string(p) + " is not an odd prime");
  }
}

int mod_p(std::int64_t v, int p) {
  std::int64_t r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int mod_p(const BigInt& v, int p) {
  return static_cast<int>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p)));
}

int inv_mod(int a, int p) {
  a = mod_p(a, p);
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "zero has no inverse mod p");
  // extended Euclid
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return mod_p(t, p);
}

// ---------------------------------------------------------------- FpVector

FpVector::FpVector(int p, std::size_t n) : p_(p), v_(n, 0) {}

FpVector::FpVector(int p, std::vector<int> entries) : p_(p), v_(std::move(entries)) {
  for (auto& x : v_) x = mod_p(x, p_);
}

bool FpVector::is_zero() const {
  for (int x : v_)
    if (x != 0) return false;
  return true;
}

FpVector FpVector::scaled(int c) const {
  FpVector r(p_, v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = mod_p(static_cast<std::int64_t>(v_[i]) * c, p_);
  return r;
}

FpVector& FpVector::operator+=(const FpVector& o) {
  if (o.p_ != p_ || o.v_.size() != v_.size()) {
    throw Error(ErrorKind::InvalidDimension, "vector sum shape mismatch");
  }
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] = (v_[i] + o.v_[i]) % p_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const FpVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

// ---------------------------------------------------------------- FpMatrix

FpMatrix::FpMatrix(int p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix::FpMatrix(int p, std::initializer_list<std::initializer_list<long>> rows)
    : FpMatrix(p, rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::InvalidDimension, "ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) set(i, j++, v);
    ++i;
  }
}

FpMatrix FpMatrix::from_rows(int p, std::size_t cols, std::span<const FpVector> rows) {
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols || rows[i].p() != p) {
      throw Error(ErrorKind::InvalidDimension, "row shape mismatch");
    }
    for (std::size_t j = 0; j < cols; ++j) m.data_[i * cols + j] = rows[i][j];
  }
  return m;
}

FpMatrix FpMatrix::reduce(const IntMatrix& a, int p) {
  FpMatrix m(p, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.data_[i * m.cols_ + j] = mod_p(a(i, j), p);
  return m;
}

FpVector FpMatrix::row(std::size_t i) const {
  return FpVector(p_, std::vector<int>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                       data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

FpVector FpMatrix::multiply(const FpVector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::InvalidDimension, "matrix-vector shape mismatch");
  FpVector y(p_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc = (acc + static_cast<std::int64_t>((*this)(i, j)) * x[j]) % p_;
    y.set(i, acc);
  }
  return y;
}

FpVector FpMatrix::combine(std::span<const int> coeffs) const {
  if (coeffs.size() != rows_) throw Error(ErrorKind::InvalidDimension, "coefficient count mismatch");
  std::vector<std::int64_t> acc(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j)
      acc[j] = (acc[j] + static_cast<std::int64_t>(coeffs[i]) * (*this)(i, j)) % p_;
  }
  FpVector out(p_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.set(j, acc[j]);
  return out;
}

std::ostream& operator<<(std::ostream& os, const FpMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows_; ++i) os << (i ? "," : "") << m.row(i);
  return os << ']';
}

// ------------------------------------------------------------- elimination

RrefResult rref(const FpMatrix& m) {
  const int p = m.p();
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t s = r;
    while (s < m.rows() && a[s][c] == 0) ++s;
    if (s == m.rows()) continue;
    std::swap(a[r], a[s]);
    const std::int64_t inv = inv_mod(static_cast<int>(a[r][c]), p);
    for (auto& x : a[r]) x = x * inv % p;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::int64_t f = a[i][c];
      for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = mod_p(a[i][j] - f * a[r][j], p);
    }
    pivots.push_back(c);
    ++r;
  }

  FpMatrix out(p, r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, a[i][j]);
  return RrefResult{std::move(out), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return rref(m).pivots.size(); }

bool in_row_span(const FpMatrix& rows, const FpVector& v) {
  if (v.size() != rows.cols()) throw Error(ErrorKind::InvalidDimension, "span test shape mismatch");
  FpMatrix stacked(rows.p(), rows.rows() + 1, rows.cols());
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) stacked.set(i, j, rows(i, j));
  for (std::size_t j = 0; j < rows.cols(); ++j) stacked.set(rows.rows(), j, v[j]);
  return rank(stacked) == rank(rows);
}

std::vector<FpVector> fp_kernel(const IntMatrix& a, int p) {
  require_odd_prime(p);
  RrefResult red = rref(FpMatrix::reduce(a, p));
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : red.pivots) is_pivot[c] = true;

  std::vector<FpVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    FpVector v(p, a.cols());
    v.set(f, 1);
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v.set(red.pivots[i], -red.matrix(i, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace clasp
