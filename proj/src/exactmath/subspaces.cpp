#include "clasp/exactmath/subspaces.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "clasp/error.hpp"

namespace clasp {

EchelonBasis::EchelonBasis(FpMatrix rows) : rows_(std::move(rows)) {
  const std::size_t d = rows_.rows();
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t c = 0;
    while (c < rows_.cols() && rows_(i, c) == 0) ++c;
    if (c == rows_.cols()) throw Error(ErrorKind::InvalidBasis, "zero row in echelon basis");
    if (rows_(i, c) != 1) throw Error(ErrorKind::InvalidBasis, "pivot entry is not 1");
    if (!pivots_.empty() && c <= pivots_.back()) {
      throw Error(ErrorKind::InvalidBasis, "pivot columns not strictly increasing");
    }
    pivots_.push_back(c);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      if (k != i && rows_(k, pivots_[i]) != 0) {
        throw Error(ErrorKind::InvalidBasis, "nonzero entry in a pivot column");
      }
}

EchelonBasis EchelonBasis::zero(int p, std::size_t n) { return EchelonBasis(FpMatrix(p, 0, n)); }

EchelonBasis EchelonBasis::span_of(const FpMatrix& m) { return EchelonBasis(rref(m).matrix); }

bool EchelonBasis::contains(const FpVector& v) const {
  if (v.size() != ambient_dim()) return false;
  // For an echelon basis the only candidate combination uses v's pivot entries.
  std::vector<int> coeffs(dim());
  for (std::size_t i = 0; i < dim(); ++i) coeffs[i] = v[pivots_[i]];
  return rows_.combine(coeffs) == v;
}

// ----------------------------------------------------------- SubspaceStream

SubspaceStream::SubspaceStream(std::size_t n, std::size_t d, int p) : SubspaceStream(n, d, p, false) {}

SubspaceStream::SubspaceStream(std::size_t n, std::size_t d, int p, bool single_cell)
    : n_(n), d_(d), p_(p), single_cell_(single_cell) {
  require_odd_prime(p);
  if (d > n) {
    throw Error(ErrorKind::InvalidDimension,
                "subspace dimension " + std::to_string(d) + " exceeds ambient dimension " + std::to_string(n));
  }
  pivots_.resize(d);
  std::iota(pivots_.begin(), pivots_.end(), std::size_t{0});
  load_cell();
}

SubspaceStream SubspaceStream::with_pivots(std::size_t n, std::vector<std::size_t> pivots, int p) {
  SubspaceStream s(n, pivots.size(), p, true);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= n || (i > 0 && pivots[i] <= pivots[i - 1])) {
      throw Error(ErrorKind::InvalidDimension, "pivot set must be strictly increasing and in range");
    }
  }
  s.pivots_ = std::move(pivots);
  s.load_cell();
  return s;
}

void SubspaceStream::load_cell() {
  free_.clear();
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t c = pivots_[i] + 1; c < n_; ++c)
      if (!std::binary_search(pivots_.begin(), pivots_.end(), c)) free_.emplace_back(i, c);
  values_.assign(free_.size(), 0);
}

bool SubspaceStream::advance_free() {
  for (std::size_t k = values_.size(); k-- > 0;) {
    if (++values_[k] < p_) return true;
    values_[k] = 0;
  }
  return false;
}

bool SubspaceStream::advance_pivots() {
  if (single_cell_) return false;
  // next d-combination of {0..n-1} in lexicographic order
  for (std::size_t i = d_; i-- > 0;) {
    if (pivots_[i] < n_ - d_ + i) {
      ++pivots_[i];
      for (std::size_t j = i + 1; j < d_; ++j) pivots_[j] = pivots_[j - 1] + 1;
      load_cell();
      return true;
    }
  }
  return false;
}

std::optional<EchelonBasis> SubspaceStream::next() {
  if (done_) return std::nullopt;
  FpMatrix m(p_, d_, n_);
  for (std::size_t i = 0; i < d_; ++i) m.set(i, pivots_[i], 1);
  for (std::size_t k = 0; k < free_.size(); ++k) m.set(free_[k].first, free_[k].second, values_[k]);
  if (!advance_free() && !advance_pivots()) done_ = true;
  return EchelonBasis(std::move(m));
}

BigInt gaussian_binomial(std::size_t n, std::size_t d, int p) {
  if (d > n) return 0;
  BigInt num = 1, den = 1;
  BigInt q = p;
  for (std::size_t i = 0; i < d; ++i) {
    BigInt a, b;
    mpz_pow_ui(a.get_mpz_t(), q.get_mpz_t(), n - i);
    mpz_pow_ui(b.get_mpz_t(), q.get_mpz_t(), i + 1);
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

}  // namespace clasp
