#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "clasp/error.hpp"
#include "clasp/exactmath/finite_field.hpp"
#include "clasp/exactmath/int_matrix.hpp"
#include "clasp/exactmath/interval.hpp"
#include "clasp/exactmath/rational.hpp"
#include "clasp/exactmath/snf.hpp"
#include "clasp/exactmath/subspaces.hpp"

using namespace clasp;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected clasp::Error");
  return ErrorKind::InvalidArgument;
}

// Independent oracle: Gaussian binomial via the q-Pascal recurrence
// [n, d] = [n-1, d-1] + p^d [n-1, d].
BigInt gaussian_recurrence(std::size_t n, std::size_t d, int p) {
  std::vector<std::vector<BigInt>> t(n + 1, std::vector<BigInt>(n + 1, 0));
  for (std::size_t m = 0; m <= n; ++m) {
    t[m][0] = 1;
    for (std::size_t k = 1; k <= m; ++k) {
      BigInt pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), k);
      t[m][k] = t[m - 1][k - 1] + pk * (k <= m - 1 ? t[m - 1][k] : BigInt(0));
    }
  }
  return t[n][d];
}

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(Rat(6, -4) == Rat(-3, 2));
  CHECK(Rat(6, -4).str() == "-3/2");
  CHECK(Rat(0, 7).str() == "0/1");
  CHECK(Rat(82).str() == "82/1");
  CHECK(Rat::parse("-16/13") == Rat(-16, 13));
  CHECK(Rat::parse("10/4") == Rat(5, 2));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK(kind_of([] { Rat::parse("1/0"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { Rat::parse("1.5"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { Rat::parse(""); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { (void)(Rat(1) / Rat(0)); }) == ErrorKind::InvalidArgument);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).ceil() == -3);
  CHECK(Rat(-7, 2).frac() == Rat(1, 2));
  CHECK(Rat(-16, 13) < Rat(-14, 13));
}

TEST_CASE("snf examples") {
  CHECK(snf(IntMatrix::identity(2)).d == std::vector<BigInt>{1, 1});
  CHECK(snf(IntMatrix{{2, 1}, {1, -2}}).d == std::vector<BigInt>{1, 5});
  CHECK(snf(IntMatrix{{6, 1}, {1, -2}}).d == std::vector<BigInt>{1, 13});
  CHECK(snf(IntMatrix{{2, 0}, {0, 3}}).d == std::vector<BigInt>{1, 6});
  CHECK(snf(IntMatrix{{0, 0}, {0, 0}}).d == std::vector<BigInt>{0, 0});
  CHECK(snf(IntMatrix{{4, 6, 8}}).d == std::vector<BigInt>{2});
}

TEST_CASE("snf round trip on random matrices") {
  std::mt19937 rng(20261017);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(rng);
    SnfResult s = snf(a);
    CHECK(s.u * a * s.w == diagonal_matrix(s.d, r, c));
    CHECK(::abs(s.u.det()) == 1);
    CHECK(::abs(s.w.det()) == 1);
    for (std::size_t i = 0; i < s.d.size(); ++i) {
      CHECK(s.d[i] >= 0);
      if (i + 1 < s.d.size()) {
        CHECK(mpz_divisible_p(s.d[i + 1].get_mpz_t(), s.d[i].get_mpz_t()) != 0);
      }
    }
    if (r == c) {
      BigInt prod = 1;
      for (const auto& x : s.d) prod *= x;
      CHECK(prod == ::abs(a.det()));
    }
  }
}

TEST_CASE("determinant and signature") {
  CHECK(IntMatrix{{2, 1}, {1, -2}}.det() == -5);
  CHECK(IntMatrix{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}.det() == -2);
  CHECK(symmetric_signature(IntMatrix{{2, 1}, {1, 2}}) == 2);
  CHECK(symmetric_signature(IntMatrix{{-2, 1}, {1, 6}}) == 0);
  CHECK(symmetric_signature(IntMatrix{{0, 1}, {1, 0}}) == 0);
  CHECK(symmetric_signature(IntMatrix{{-1, 0, 0}, {0, -3, 0}, {0, 0, 2}}) == -1);
  CHECK(kind_of([] { symmetric_signature(IntMatrix{{1, 1}, {1, 1}}); }) == ErrorKind::DegenerateForm);
  CHECK(kind_of([] { symmetric_signature(IntMatrix{{1, 2}, {0, 1}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("fp_kernel examples") {
  auto k1 = fp_kernel(IntMatrix{{2, 1}, {1, -2}}, 5);
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == FpVector(5, {2, 1}));
  auto k2 = fp_kernel(IntMatrix{{6, 1}, {1, -2}}, 13);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == FpVector(13, {2, 1}));
  CHECK(fp_kernel(IntMatrix::identity(2), 5).empty());
  CHECK(kind_of([] { fp_kernel(IntMatrix::identity(2), 9); }) == ErrorKind::InadmissiblePrime);
}

TEST_CASE("fp_kernel agrees with brute force") {
  std::mt19937 rng(7);
  for (int p : {3, 5, 7, 11, 13}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + trial % 3;
      const std::size_t rows = 1 + (trial / 3) % 3;
      std::uniform_int_distribution<int> entry(-2 * p, 2 * p);
      IntMatrix a(rows, n);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = trial % 4 == 0 ? entry(rng) % 2 * p : entry(rng);

      auto basis = fp_kernel(a, p);
      FpMatrix reduced = FpMatrix::reduce(a, p);
      for (const auto& v : basis) CHECK(reduced.multiply(v).is_zero());

      // every kernel vector found by scanning lies in the span of the basis
      std::size_t kernel_size = 0;
      FpMatrix bm = FpMatrix::from_rows(p, n, basis);
      std::vector<int> x(n, 0);
      for (;;) {
        FpVector v(p, x);
        if (reduced.multiply(v).is_zero()) {
          ++kernel_size;
          CHECK(in_row_span(bm, v));
        }
        std::size_t k = 0;
        while (k < n && ++x[k] == p) x[k++] = 0;
        if (k == n) break;
      }
      std::size_t expected = 1;
      for (std::size_t i = 0; i < basis.size(); ++i) expected *= static_cast<std::size_t>(p);
      CHECK(kernel_size == expected);
      CHECK(rank(bm) == basis.size());
    }
  }
}

TEST_CASE("subspace enumeration counts and uniqueness") {
  struct Case {
    std::size_t n, d;
    int p;
    long expected;
  };
  for (auto c : {Case{2, 1, 5, 6}, Case{4, 1, 5, 156}, Case{4, 2, 5, 806}, Case{3, 0, 13, 1}, Case{3, 2, 3, 13},
                 Case{4, 2, 13, 31110}}) {
    CAPTURE(c.n);
    CAPTURE(c.d);
    CAPTURE(c.p);
    CHECK(gaussian_binomial(c.n, c.d, c.p) == c.expected);
    CHECK(gaussian_recurrence(c.n, c.d, c.p) == c.expected);

    std::set<std::string> seen;
    SubspaceStream stream(c.n, c.d, c.p);
    long count = 0;
    std::vector<std::size_t> last_pivots;
    while (auto b = stream.next()) {
      ++count;
      CHECK(b->dim() == c.d);
      CHECK(b->pivots() >= last_pivots);  // pivot sets non-decreasing lexicographically
      last_pivots = b->pivots();
      std::ostringstream os;
      os << b->matrix();
      CHECK(seen.insert(os.str()).second);
    }
    CHECK(count == c.expected);
  }
}

TEST_CASE("subspace stream order and errors") {
  SubspaceStream s(4, 1, 5);
  auto first = s.next();
  REQUIRE(first);
  CHECK(first->matrix().row(0) == FpVector(5, {1, 0, 0, 0}));
  auto second = s.next();
  CHECK(second->matrix().row(0) == FpVector(5, {1, 0, 0, 1}));

  SubspaceStream z(3, 0, 13);
  auto zero = z.next();
  REQUIRE(zero);
  CHECK(zero->dim() == 0);
  CHECK(!z.next());

  CHECK(kind_of([] { SubspaceStream(2, 3, 5); }) == ErrorKind::InvalidDimension);

  // pivot cells partition the stream
  long total = 0;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) {
      auto cell = SubspaceStream::with_pivots(4, {a, b}, 5);
      while (cell.next()) ++total;
    }
  CHECK(total == 806);

  CHECK(kind_of([] { EchelonBasis(FpMatrix(5, {{1, 2}, {1, 0}})); }) == ErrorKind::InvalidBasis);
  CHECK(kind_of([] { EchelonBasis(FpMatrix(5, {{2, 0}})); }) == ErrorKind::InvalidBasis);
}

TEST_CASE("interval arithmetic") {
  CHECK(interval_sum({}) == RatInterval(0, 0));
  std::vector<RatInterval> two{{Rat(-22, 13), Rat(4, 13)}, {Rat(-42, 13), Rat(-16, 13)}};
  CHECK(interval_sum(two) == RatInterval(Rat(-64, 13), Rat(-12, 13)));
  std::vector<RatInterval> one{{Rat(1, 3), Rat(2, 3)}};
  CHECK(interval_sum(one) == one[0]);

  CHECK(certified_abs_exceeds(RatInterval(Rat(-42, 13), Rat(-16, 13)), 0));
  CHECK_FALSE(certified_abs_exceeds(RatInterval(Rat(-22, 13), Rat(4, 13)), 0));
  CHECK_FALSE(certified_abs_exceeds(RatInterval(Rat(9, 13) - 1, Rat(9, 13) + 1), 4));
  CHECK(kind_of([] { certified_abs_exceeds(RatInterval(0, 1), -1); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { RatInterval(1, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("interval properties") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-60, 60);
  std::uniform_int_distribution<int> den(1, 13);
  auto random_interval = [&] {
    Rat a(num(rng), den(rng)), b(num(rng), den(rng));
    return RatInterval(min(a, b), max(a, b));
  };
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RatInterval> items(static_cast<std::size_t>(trial % 5));
    for (auto& it : items) it = random_interval();
    const RatInterval total = interval_sum(items);
    auto perm = items;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(interval_sum(perm) == total);
    if (items.size() >= 2) {
      // (a + b) + rest == a + (b + rest)
      std::vector<RatInterval> rest(items.begin() + 1, items.end());
      std::vector<RatInterval> grouped{items[0], interval_sum(rest)};
      CHECK(interval_sum(grouped) == total);
    }

    const RatInterval iv = random_interval();
    const Rat t(num(rng) < 0 ? -num(rng) : num(rng), den(rng));
    if (t.sign() >= 0 && certified_abs_exceeds(iv, t)) {
      for (int k = 0; k <= 4; ++k) CHECK(certified_abs_exceeds(iv, t * Rat(k, 4)));
    }
  }
}
