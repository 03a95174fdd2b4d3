#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"

#include "clasp/error.hpp"
#include "clasp/genusbound/family.hpp"
#include "clasp/genusbound/lemma.hpp"
#include "clasp/genusbound/linear.hpp"
#include "clasp/genusbound/obstruction.hpp"

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

Summand bm(std::int64_t m) { return make_summand(4 * m * m + 1, 2 * m); }

SumSpec genus_one_sum() { return SumSpec({bm(1), bm(51), bm(101), bm(226)}, 5); }

const ObstructionConfig kLiteral{ObstructionMode::Literal, std::nullopt};
const ObstructionConfig kIsotropic{ObstructionMode::Isotropic, std::nullopt};

std::size_t count_equal(const FpVector& v, int value) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < v.size(); ++i) c += v[i] == value ? 1 : 0;
  return c;
}

}  // namespace

TEST_CASE("constant coordinate vector examples") {
  const FpMatrix two(5, {{1, 0, 2, 3}, {0, 1, 4, 1}});
  CHECK(constant_coordinate_vector(two, 3) == FpVector(5, {3, 3, 3, 2}));

  FpMatrix id(7, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.set(i, i, 1);
  CHECK(constant_coordinate_vector(id, 4) == FpVector(7, {4, 4, 4}));

  const FpMatrix row(13, {{3, 5, 0, 7}});
  CHECK(constant_coordinate_vector(row, 1) == row.row(0).scaled(inv_mod(3, 13)));

  CHECK(kind_of([] { constant_coordinate_vector(FpMatrix(5, {{1, 2, 3}, {2, 4, 6}}), 1); }) ==
        ErrorKind::InvalidBasis);
  CHECK(kind_of([] { constant_coordinate_vector(FpMatrix(5, 0, 3), 1); }) == ErrorKind::InvalidBasis);
  CHECK(kind_of([&] { constant_coordinate_vector(two, 5); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("constant coordinate vector property") {
  std::mt19937 rng(20261017);
  int cases = 0;
  for (int p : {5, 13}) {
    std::uniform_int_distribution<int> entry(0, p - 1);
    std::uniform_int_distribution<int> unit(1, p - 1);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    for (int done = 0; done < 500;) {
      const std::size_t n = size(rng);
      const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
      FpMatrix m(p, k, n);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, entry(rng));
      if (rank(m) != k) continue;
      const EchelonBasis basis = EchelonBasis::span_of(m);
      const int v = unit(rng);
      const FpVector x = constant_coordinate_vector(basis, v);
      CHECK(in_row_span(m, x));
      CHECK(count_equal(x, v) >= k);
      // The same vector comes out of any basis of the span.
      CHECK(constant_coordinate_vector(m, v) == x);
      ++done;
      ++cases;
    }
  }
  CHECK(cases == 1000);
}

TEST_CASE("obstruction on the genus-1 B_m family sum") {
  const SumSpec s = genus_one_sum();

  const ObstructionResult literal = obstructed(s, 1, kLiteral);
  CHECK_FALSE(literal.obstructed);
  REQUIRE(literal.witnesses.unobstructed_subspace.has_value());
  CHECK(*literal.witnesses.unobstructed_subspace == Rows{{1, 0, 0, 0}});
  CHECK(literal.witnesses.dim == 1);

  const ObstructionResult iso = obstructed(s, 1, kIsotropic);
  CHECK(iso.obstructed);
  // Oracle: nonzero solutions of x1^2 + x2^2 + x3^2 + x4^2 = 0 over F_5,
  // four per line (every summand links its generator by 2/5).
  int zeros = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d) zeros += (a * a + b * b + c * c + d * d) % 5 == 0 ? 1 : 0;
  CHECK(iso.witnesses.examined == static_cast<std::size_t>((zeros - 1) / 4));
  CHECK(iso.witnesses.examined == 36);
  for (const auto& w : iso.witnesses.bad) {
    CHECK(certified_abs_exceeds(w.interval, 4));
    // no isotropic line is a coordinate line
    CHECK(std::count(w.basis[0].begin(), w.basis[0].end(), 0) < 3);
  }

  for (const auto& cfg : {kLiteral, kIsotropic}) {
    const ObstructionResult g0 = obstructed(s, 0, cfg);
    CHECK(g0.obstructed);
    CHECK(g0.witnesses.dim == 2);
  }
  CHECK(obstructed(s, 0, kLiteral).witnesses.examined == 806);

  const ObstructionResult top = obstructed(s, 2, kLiteral);
  CHECK_FALSE(top.obstructed);
  CHECK(top.witnesses.dim == 0);

  CHECK(kind_of([&] { obstructed(s, 3, kLiteral); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([&] { obstructed(s, -1, kLiteral); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([&] { ObstructionEngine(s, ObstructionConfig{ObstructionMode::Literal, 3}); }) ==
        ErrorKind::OutOfRange);
}

TEST_CASE("genus lower bound scan") {
  const BoundCertificate iso = genus_lower_bound(genus_one_sum(), kIsotropic);
  CHECK(iso.g_lower == 2);
  CHECK(replay(iso).ok);
  const BoundCertificate lit = genus_lower_bound(genus_one_sum(), kLiteral);
  CHECK(lit.g_lower == 1);
  CHECK(replay(lit).ok);

  // The only line of (F_13)^1 holds every chi_r; chi_2 has interval
  // [10/13, 36/13], so g = 0 is obstructed even literally.
  const SumSpec b13({make_summand(13, 2)}, 13);
  CHECK(genus_lower_bound(b13, kLiteral).g_lower == 1);
  CHECK(genus_lower_bound(b13, kIsotropic).g_lower == 1);
  const ExhaustiveLevel single = obstructed(b13, 0, kLiteral).witnesses;
  CHECK(single.examined == 1);
  CHECK(single.obstructed);
  CHECK(single.bad[0].chi == std::vector<int>{2});
  CHECK(single.bad[0].interval == RatInterval(Rat(10, 13), Rat(36, 13)));
  // isotropic mode: the line is not isotropic, so nothing is left to examine
  CHECK(obstructed(b13, 0, kIsotropic).witnesses.examined == 0);

  const BoundCertificate empty = genus_lower_bound(SumSpec({}, 5));
  CHECK(empty.g_lower == 0);
  CHECK(replay(empty).ok);

  // g_max caps the claim
  const BoundCertificate capped = genus_lower_bound(genus_one_sum(), ObstructionConfig{ObstructionMode::Isotropic, 0});
  CHECK(capped.g_lower == 1);
  CHECK(replay(capped).ok);
}

TEST_CASE("signature precondition") {
  // B(7,3) has an odd chain coefficient, so its signature is not modelled.
  const SumSpec odd({make_summand(7, 3)}, 7);
  CHECK(kind_of([&] { genus_lower_bound(odd); }) == ErrorKind::PreconditionViolation);
  CHECK(kind_of([&] { analytic_certificate(odd, 0); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("monotonicity, literal vs isotropic, sign robustness") {
  std::vector<std::pair<std::vector<Summand>, int>> sums{{{make_summand(13, 2)}, 13}};
  const std::vector<Summand> pool{make_summand(5, 2), bm(26), bm(51)};
  std::vector<std::vector<Summand>> frontier{{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<std::vector<Summand>> next;
    for (const auto& prefix : frontier)
      for (const auto& s : pool) {
        auto extended = prefix;
        extended.push_back(s);
        sums.emplace_back(extended, 5);
        next.push_back(std::move(extended));
      }
    frontier = std::move(next);
  }
  CHECK(sums.size() == 40);

  for (const auto& [summands, p] : sums) {
    const SumSpec spec(summands, p);
    const SumSpec flipped = mirror(spec);
    const int top = static_cast<int>(spec.size() / 2);
    int bound[2] = {0, 0};
    int idx = 0;
    for (const auto& cfg : {kLiteral, kIsotropic}) {
      const ObstructionEngine engine(spec, cfg);
      const ObstructionEngine mirrored(flipped, cfg);
      bool previous = true;
      for (int g = 0; g <= top; ++g) {
        const bool now = engine.level(g).obstructed;
        if (now) CHECK(previous);
        CHECK(mirrored.level(g).obstructed == now);
        previous = now;
      }
      const BoundCertificate cert = engine.lower_bound();
      CHECK(mirrored.lower_bound().g_lower == cert.g_lower);
      CHECK(replay(cert).ok);
      bound[idx++] = cert.g_lower;
    }
    CHECK(bound[0] <= bound[1]);
  }
}

TEST_CASE("linear coefficient") {
  const CgTable t = cg_table(two_bridge(13, 2), 13);
  const LinearCoefficient lc = linear_coefficient(t);
  CHECK(lc.c == Rat(82));
  CHECK(lc.b_minus == Rat(16, 13));
  CHECK(lc.b_plus == Rat(14, 13));
  CHECK(t[lc.r_m].abs() == Rat(29, 13));
  CHECK(lc.orientation == -1);

  const LinearCoefficient mc = linear_coefficient(cg_table(mirror(make_summand(13, 2)), 13));
  CHECK(mc.c == Rat(82));
  CHECK(mc.orientation == 1);
  CHECK(mc.r_m == lc.r_m);

  CgTable flat = t;
  std::fill(flat.values.begin(), flat.values.end(), Rat(0));
  CHECK(kind_of([&] { linear_coefficient(flat); }) == ErrorKind::NoLinearBound);
}

TEST_CASE("linear bound") {
  const CgTable t = cg_table(two_bridge(13, 2), 13);
  for (auto [n, expected] : {std::pair<long, int>{164, 2}, {82, 1}, {2, 1}, {0, 0}, {166, 3}, {1640, 20}}) {
    CAPTURE(n);
    const BoundCertificate c = linear_bound(n, t);
    CHECK(c.g_lower == expected);
    const ReplayResult r = replay(c);
    CHECK_MESSAGE(r.ok, r.detail);
    const auto& w = std::get<LinearWitness>(c.witnesses);
    CHECK(w.c == Rat(82));
    // oracle: the per-genus inequality is equivalent to n > 82 g
    for (const auto& s : w.steps) CHECK(n > 82 * s.g);
  }
  CHECK(kind_of([&] { linear_bound(3, t); }) == ErrorKind::HypothesisViolation);
  CHECK(kind_of([&] { linear_bound(-2, t); }) == ErrorKind::HypothesisViolation);
}

TEST_CASE("greedy family") {
  const FamilyParams f1 = greedy_family(1);
  CHECK(f1.m_values() == std::vector<std::int64_t>{1, 51, 101, 226});
  CHECK(f1.steps[1].lower == Rat(76, 5));  // (8k - 4)/5 at k = 10
  CHECK(f1.steps[1].upper_before + 8 == Rat(46, 5));
  CHECK(replay_family(f1));

  // Oracle: the closed form (8k+1)/5 with the same scan rule.
  for (int g = 1; g <= 3; ++g) {
    CAPTURE(g);
    const FamilyParams f = greedy_family(g);
    REQUIRE(f.steps.size() == static_cast<std::size_t>(4 * g));
    CHECK(replay_family(f));
    std::vector<std::int64_t> oracle{1};
    Rat upper(Rat(6, 5));
    std::int64_t k = 0;
    for (int j = 2; j <= 4 * g; ++j) {
      do k += 5;
      while (!(Rat(8 * k - 4, 5) > upper + j * 4));
      oracle.push_back(5 * k + 1);
      upper += Rat(8 * k + 6, 5);
    }
    CHECK(f.m_values() == oracle);
    for (auto m : f.m_values()) CHECK(m % 5 == 1);
  }
  CHECK(greedy_family(2).m_values() == std::vector<std::int64_t>{1, 51, 101, 226, 476, 951, 1926, 3876});

  FamilyParams tampered = f1;
  tampered.steps[2].m = 51;
  tampered.steps[2].k = 10;
  CHECK_FALSE(replay_family(tampered));
  tampered = f1;
  tampered.steps[3].lower += Rat(1, 5);
  CHECK_FALSE(replay_family(tampered));
  CHECK(kind_of([] { greedy_family(0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("analytic certificate") {
  const BoundCertificate c = analytic_certificate_ex1(greedy_family(1), 1);
  CHECK(c.g_lower == 2);
  CHECK(c.mode == ObstructionMode::Isotropic);
  const auto& w = std::get<AnalyticWitness>(c.witnesses);
  REQUIRE(w.steps.size() == 4);
  CHECK(w.steps[0].isotropy_linking.has_value());
  CHECK(w.steps[1].lower - w.steps[1].upper_sum == Rat(14));
  CHECK(replay(c).ok);

  // agreement with the exhaustive engine
  CHECK(genus_lower_bound(genus_one_sum(), kIsotropic).g_lower >= c.g_lower);

  CHECK(kind_of([] { analytic_certificate_ex1(std::vector<std::int64_t>{1, 51, 51, 226}, 1); }) ==
        ErrorKind::FamilyNotCertifying);

  for (int g = 2; g <= 3; ++g) {
    const BoundCertificate cg = analytic_certificate_ex1(greedy_family(g), g);
    CHECK(cg.g_lower == g + 1);
    CHECK(cg.mode == ObstructionMode::Literal);
    CHECK(replay(cg).ok);
  }

  // degenerate g = 0: one interval excluding 0 suffices
  const BoundCertificate g0 = analytic_certificate_ex1(std::vector<std::int64_t>{26}, 0);
  CHECK(g0.g_lower == 1);
  CHECK(g0.mode == ObstructionMode::Literal);
  CHECK(replay(g0).ok);
  CHECK(kind_of([] { analytic_certificate_ex1(std::vector<std::int64_t>{26}, 1); }) == ErrorKind::OutOfRange);
}

TEST_CASE("certificate serialization round trip") {
  const std::vector<BoundCertificate> certs{
      genus_lower_bound(genus_one_sum(), kIsotropic), genus_lower_bound(genus_one_sum(), kLiteral),
      analytic_certificate_ex1(greedy_family(1), 1), linear_bound(164, cg_table(two_bridge(13, 2), 13)),
      genus_lower_bound(SumSpec({}, 5))};
  for (const auto& c : certs) {
    const std::string text = serialize(c);
    const BoundCertificate back = parse_certificate(text);
    CHECK(back == c);
    CHECK(serialize(back) == text);
    CHECK(replay(back).ok);
  }
  const auto j = to_json(certs[3]);
  CHECK(j["witnesses"]["c"] == "82/1");
  CHECK(j["summands"] == nlohmann::ordered_json::array({nlohmann::ordered_json::array({13, 2})}));
  CHECK(kind_of([] { parse_certificate("{\"kind\": \"exhaustive\"}"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_certificate("not json"); }) == ErrorKind::ParseError);
}

TEST_CASE("replay rejects tampered certificates") {
  BoundCertificate iso = genus_lower_bound(genus_one_sum(), kIsotropic);
  {
    BoundCertificate c = iso;
    c.g_lower = 3;
    CHECK_FALSE(replay(c).ok);
  }
  {
    BoundCertificate c = iso;
    auto& bad = std::get<ExhaustiveWitness>(c.witnesses).levels[1].bad[5];
    bad.chi[0] = (bad.chi[0] + 1) % 5;
    CHECK_FALSE(replay(c).ok);
  }
  {
    BoundCertificate c = iso;
    auto& level = std::get<ExhaustiveWitness>(c.witnesses).levels[1];
    level.bad.pop_back();
    --level.examined;
    CHECK_FALSE(replay(c).ok);
  }
  {
    BoundCertificate c = iso;
    c.mode = ObstructionMode::Literal;  // the isotropic witnesses do not cover every line
    CHECK_FALSE(replay(c).ok);
  }
  {
    BoundCertificate c = iso;
    c.summands[1].sigma[1] = Rat(1, 5);
    CHECK_FALSE(replay(c).ok);
  }
  {
    BoundCertificate c = linear_bound(164, cg_table(two_bridge(13, 2), 13));
    c.g_lower = 3;
    CHECK_FALSE(replay(c).ok);
    c = linear_bound(164, cg_table(two_bridge(13, 2), 13));
    std::get<LinearWitness>(c.witnesses).c = Rat(81);
    CHECK_FALSE(replay(c).ok);
  }
  {
    BoundCertificate c = analytic_certificate_ex1(greedy_family(1), 1);
    c.summands[0].linking = Rat(0);
    std::get<AnalyticWitness>(c.witnesses).steps[0].isotropy_linking = Rat(0);
    CHECK_FALSE(replay(c).ok);
  }
}
