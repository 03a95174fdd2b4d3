#include <numeric>
#include <vector>

#include "doctest.h"

#include "clasp/error.hpp"
#include "clasp/exactmath/snf.hpp"
#include "clasp/knotmodel/seifert.hpp"
#include "clasp/knotmodel/sum.hpp"
#include "clasp/knotmodel/two_bridge.hpp"

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

}  // namespace

TEST_CASE("two_bridge validation and normalisation") {
  CHECK(two_bridge(13, 2) == TwoBridgeKnot{13, 2, {}});
  CHECK(two_bridge(5, 2).name() == "B(5,2)");
  CHECK(two_bridge(13, 15).b == 2);
  CHECK(two_bridge(13, -2).b == 11);
  CHECK(kind_of([] { two_bridge(9, 3); }) == ErrorKind::InvalidKnot);
  CHECK(kind_of([] { two_bridge(6, 1); }) == ErrorKind::InvalidKnot);
  CHECK(kind_of([] { two_bridge(1, 1); }) == ErrorKind::InvalidKnot);
}

TEST_CASE("chain presentations") {
  CHECK(chain_presentation(two_bridge(13, 2)).lambda() == IntMatrix{{6, 1}, {1, -2}});
  CHECK(chain_presentation(two_bridge(5, 2)).lambda() == IntMatrix{{2, 1}, {1, -2}});
  CHECK(chain_presentation(two_bridge(7, 3)).lambda() == IntMatrix{{2, 1}, {1, -3}});
  CHECK(kind_of([] { chain_presentation(two_bridge(11, 3)); }) == ErrorKind::UnsupportedPresentation);

  for (long m = 1; m <= 100; ++m) {
    const auto chain = chain_presentation(two_bridge(4 * m * m + 1, 2 * m));
    CHECK(chain.lambda() == IntMatrix{{2 * m, 1}, {1, -2 * m}});
  }

  const auto p = chain_presentation(two_bridge(13, 2));
  CHECK(mirror(p).lambda() == IntMatrix{{-6, -1}, {-1, 2}});
  CHECK(mirror(mirror(p)) == p);
  CHECK(mirror(p).lambda().det() == p.lambda().det());
}

TEST_CASE("double cover homology") {
  CHECK(double_cover_homology(two_bridge(5, 2)) == 5);
  CHECK(double_cover_homology(two_bridge(13, 2)) == 13);
  CHECK(double_cover_homology(two_bridge(10405, 102)) == 10405);
  CHECK(kind_of([] { double_cover_homology(two_bridge(11, 3)); }) == ErrorKind::UnsupportedPresentation);
}

TEST_CASE("B_m family") {
  const auto b1 = bm_family(1);
  CHECK(b1.knot == two_bridge(5, 2));
  CHECK(b1.knot.name() == "B(2,2)");
  CHECK(b1.seifert.symmetrized() == IntMatrix{{2, 1}, {1, -2}});
  CHECK(bm_family(26).knot == two_bridge(2705, 52));

  for (long m : {1L, 2L, 7L, 26L, 51L, 100L}) {
    const auto member = bm_family(m);
    const BigInt a = 4 * m * m + 1;
    CHECK(member.seifert.determinant() == a);
    CHECK(double_cover_homology(member.knot) == a);
    CHECK(snf(chain_presentation(member.knot).lambda()).d == std::vector<BigInt>{1, a});
    CHECK(classical_signature(member.seifert) == 0);
    CHECK(member.record.c_plus == 0);
    CHECK(member.record.c_minus == 0);
    CHECK(member.record.amphicheiral == true);
    CHECK(clasp_record_check(member.record));
    // chain Seifert form agrees with the family's form
    CHECK(seifert_from_chain(chain_presentation(member.knot)).matrix() == member.seifert.matrix());
  }
  CHECK(kind_of([] { bm_family(0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("twist knots") {
  const auto k3 = twist_knot(3);
  CHECK(k3.knot == two_bridge(13, 2));
  CHECK(k3.seifert.symmetrized() == IntMatrix{{-2, 1}, {1, 6}});
  CHECK(k3.seifert.symmetrized().det() == -13);
  CHECK(k3.record.c_plus == 0);
  CHECK(k3.record.c_minus == 0);
  CHECK(twist_knot(2).seifert.determinant() == 9);
  CHECK(twist_knot(2).knot == two_bridge(9, 2));
  CHECK(twist_knot(1).seifert.determinant() == 5);
  for (long t = 1; t <= 40; ++t) CHECK(classical_signature(twist_knot(t).seifert) == 0);
}

TEST_CASE("classical signature") {
  CHECK(classical_signature(SeifertForm(IntMatrix{{-1, 0}, {1, 3}})) == 0);
  CHECK(classical_signature(SeifertForm(IntMatrix{{1, 0}, {1, 1}})) == 2);
  CHECK(classical_signature(SeifertForm(IntMatrix{{-1, 0}, {1, -1}})) == -2);
  CHECK(kind_of([] { SeifertForm(IntMatrix{{1, 0}, {0, 1}}); }) == ErrorKind::InvalidArgument);
  // genus two, two hyperbolic blocks
  IntMatrix v(4, 4);
  v(1, 0) = 1;
  v(3, 2) = 1;
  CHECK(classical_signature(SeifertForm(v)) == 0);
}

TEST_CASE("p-torsion admissibility") {
  CHECK(p_torsion_admissible(two_bridge(5, 2), 5));
  CHECK(p_torsion_admissible(two_bridge(10405, 102), 5));
  CHECK_FALSE(p_torsion_admissible(two_bridge(25, 7), 5));
  CHECK_FALSE(p_torsion_admissible(two_bridge(13, 2), 5));
}

TEST_CASE("linking form") {
  CHECK(linking_value(two_bridge(5, 2), 1, 1) == Rat(2, 5));
  CHECK(linking_value(two_bridge(13, 2), 0, 7) == Rat(0));
  CHECK(linking_value(two_bridge(13, 2), 13, 13) == Rat(0));
  CHECK(linking_value(two_bridge(13, 2), -1, 1) == Rat(11, 13));

  for (long a : {3L, 5L, 7L, 9L, 11L, 13L}) {
    for (long b = 1; b < a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto k = two_bridge(a, b);
      const bool squarefree = a != 9;
      for (long x = 0; x < a; ++x) {
        bool pairs_nontrivially = false;
        for (long y = 0; y < a; ++y) pairs_nontrivially = pairs_nontrivially || !linking_value(k, x, y).is_zero();
        CHECK(pairs_nontrivially == (x != 0));
        if (x != 0 && squarefree) CHECK_FALSE(linking_value(k, x, x).is_zero());
        for (long y = 0; y < a; ++y) {
          CHECK(linking_value(k, x, y) == linking_value(k, y, x));
          for (long z = 0; z < a; z += 3) {
            CHECK(linking_value(k, x + z, y) == (linking_value(k, x, y) + linking_value(k, z, y)).frac());
          }
        }
      }
    }
  }
}

TEST_CASE("clasp records") {
  CHECK(clasp_record_check(bm_family(1).record));
  CHECK(bm_family(1).record.c == 1);

  KnotRecord bad{two_bridge(5, 2), std::nullopt, std::nullopt, 0, 1, std::nullopt, {}};
  CHECK_FALSE(clasp_record_check(bad));
  KnotRecord bad2{two_bridge(5, 2), 1, 1, 1, std::nullopt, std::nullopt, {}};
  CHECK_FALSE(clasp_record_check(bad2));
  KnotRecord negative{two_bridge(5, 2), -1, 0, std::nullopt, std::nullopt, std::nullopt, {}};
  CHECK_FALSE(clasp_record_check(negative));

  const auto k1 = twist_knot(3).record;
  std::vector<KnotRecord> parts(6, k1);
  KnotRecord sum{two_bridge(13, 2, "K_6"), 0, 0, std::nullopt, std::nullopt, std::nullopt, {}};
  CHECK(clasp_record_check(sum, parts));
  sum.c_plus = 1;  // exceeds the sum over the parts
  CHECK_FALSE(clasp_record_check(sum, parts));
}

TEST_CASE("sum specs") {
  SumSpec s({make_summand(5, 2), make_summand(2705, 52)}, 5);
  CHECK(s.size() == 2);
  CHECK(classical_signature(s) == 0);
  CHECK(kind_of([] { SumSpec({make_summand(13, 2)}, 5); }) == ErrorKind::InadmissiblePrime);
  CHECK(kind_of([] { SumSpec({make_summand(25, 2)}, 5); }) == ErrorKind::InadmissiblePrime);
  CHECK(kind_of([] { SumSpec({make_summand(5, 2)}, 4); }) == ErrorKind::InadmissiblePrime);

  const Summand m = make_summand(13, -2);
  CHECK(m.mirrored);
  CHECK(m.signed_b() == -2);
  CHECK(m.chain().lambda() == IntMatrix{{-6, -1}, {-1, 2}});
  CHECK(m.linking_value(1, 1) == Rat(11, 13));
  CHECK(p_torsion_linking(make_summand(5, 2), 5) == Rat(2, 5));
  CHECK(p_torsion_linking(make_summand(13, 2), 13) == Rat(2, 13));
  CHECK(classical_signature(mirror(s)) == 0);
}
