#include "clasp/exactmath/snf.hpp"

#include <algorithm>

namespace clasp {

namespace {

struct Reducer {
  IntMatrix a;
  IntMatrix u;
  IntMatrix w;

  explicit Reducer(const IntMatrix& m)
      : a(m), u(IntMatrix::identity(m.rows())), w(IntMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    u.swap_rows(x, y);
  }
  void swap_cols(std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    w.swap_cols(x, y);
  }
  void add_row(std::size_t dst, std::size_t src, const BigInt& f) {
    a.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& f) {
    a.add_col_multiple(dst, src, f);
    w.add_col_multiple(dst, src, f);
  }

  // Moves the smallest nonzero |entry| of the trailing block to (t, t).
  bool bring_min_pivot(std::size_t t) {
    bool found = false;
    std::size_t bi = t, bj = t;
    BigInt best;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        BigInt v = ::abs(a(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Euclidean sweep of column t and row t; returns false if a remainder was
  // left behind (the caller re-pivots).
  bool clear_cross(std::size_t t) {
    bool clean = true;
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
      if (a(i, t) == 0) continue;
      BigInt q;
      mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
      add_row(i, t, -q);
      if (a(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
      if (a(t, j) == 0) continue;
      BigInt q;
      mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
      add_col(j, t, -q);
      if (a(t, j) != 0) clean = false;
    }
    return clean;
  }

  void reduce() {
    const std::size_t lim = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < lim; ++t) {
      if (!bring_min_pivot(t)) break;
      for (;;) {
        if (!clear_cross(t)) {
          bring_min_pivot(t);
          continue;
        }
        // Enforce divisibility of the trailing block by the pivot.
        bool divisible = true;
        for (std::size_t i = t + 1; i < a.rows() && divisible; ++i)
          for (std::size_t j = t + 1; j < a.cols(); ++j) {
            if (mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t()) == 0) {
              add_row(t, i, 1);
              divisible = false;
              break;
            }
          }
        if (divisible) break;
      }
      if (a(t, t) < 0) {
        a.negate_row(t);
        u.negate_row(t);
      }
    }
  }
};

}  // namespace

IntMatrix diagonal_matrix(const std::vector<BigInt>& d, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size() && i < rows && i < cols; ++i) m(i, i) = d[i];
  return m;
}

SnfResult snf(const IntMatrix& a) {
  Reducer r(a);
  r.reduce();
  std::vector<BigInt> d;
  const std::size_t lim = std::min(a.rows(), a.cols());
  d.reserve(lim);
  for (std::size_t i = 0; i < lim; ++i) d.push_back(r.a(i, i));
  return SnfResult{std::move(d), std::move(r.u), std::move(r.w)};
}

}  // namespace clasp
