#include "clasp/genusbound/certificate.hpp"

#include <string>

#include "clasp/error.hpp"
#include "clasp/exactmath/finite_field.hpp"
#include "clasp/exactmath/subspaces.hpp"

namespace clasp {

using nlohmann::ordered_json;

std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::Exhaustive: return "exhaustive";
    case CertificateKind::AnalyticEx1: return "analytic-ex1";
    case CertificateKind::LinearEx2: return "linear-ex2";
  }
  return "unknown";
}

std::string_view to_string(ObstructionMode m) {
  return m == ObstructionMode::Literal ? "literal" : "isotropic";
}

ObstructionMode parse_mode(std::string_view s) {
  if (s == "literal") return ObstructionMode::Literal;
  if (s == "isotropic") return ObstructionMode::Isotropic;
  throw Error(ErrorKind::ParseError, "unknown obstruction mode '" + std::string(s) + "'");
}

namespace {

CertificateKind parse_kind(std::string_view s) {
  for (auto k : {CertificateKind::Exhaustive, CertificateKind::AnalyticEx1, CertificateKind::LinearEx2})
    if (to_string(k) == s) return k;
  throw Error(ErrorKind::ParseError, "unknown certificate kind '" + std::string(s) + "'");
}

// ---- serialization -------------------------------------------------------

ordered_json rat_list(const std::vector<Rat>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

ordered_json interval_json(const RatInterval& i) { return ordered_json::array({i.lo().str(), i.hi().str()}); }

ordered_json witness_json(const ExhaustiveWitness& w) {
  ordered_json levels = ordered_json::array();
  for (const auto& l : w.levels) {
    ordered_json bad = ordered_json::array();
    for (const auto& b : l.bad) {
      bad.push_back({{"basis", b.basis}, {"chi", b.chi}, {"interval", interval_json(b.interval)}});
    }
    levels.push_back({{"g", l.g},
                      {"dim", l.dim},
                      {"obstructed", l.obstructed},
                      {"examined", l.examined},
                      {"bad", std::move(bad)},
                      {"unobstructed_subspace",
                       l.unobstructed_subspace ? ordered_json(*l.unobstructed_subspace) : ordered_json(nullptr)}});
  }
  return {{"levels", std::move(levels)}};
}

ordered_json witness_json(const AnalyticWitness& w) {
  ordered_json steps = ordered_json::array();
  for (const auto& s : w.steps) {
    steps.push_back({{"a", s.a},
                     {"lower", s.lower.str()},
                     {"upper_sum", s.upper_sum.str()},
                     {"isotropy_linking", s.isotropy_linking ? ordered_json(s.isotropy_linking->str())
                                                             : ordered_json(nullptr)}});
  }
  return {{"g", w.g}, {"dim", w.dim}, {"lower", rat_list(w.lower)}, {"upper", rat_list(w.upper)},
          {"steps", std::move(steps)}};
}

ordered_json witness_json(const LinearWitness& w) {
  ordered_json steps = ordered_json::array();
  for (const auto& s : w.steps) steps.push_back({{"g", s.g}, {"k", s.k}, {"lhs", s.lhs.str()}});
  return {{"n", w.n},
          {"orientation", w.orientation},
          {"r_m", w.r_m},
          {"b_minus", w.b_minus.str()},
          {"b_plus", w.b_plus.str()},
          {"c", w.c.str()},
          {"steps", std::move(steps)}};
}

// ---- parsing -------------------------------------------------------------

Rat rat_at(const ordered_json& j) { return Rat::parse(j.get<std::string>()); }

std::vector<Rat> rats_at(const ordered_json& j) {
  std::vector<Rat> out;
  for (const auto& x : j) out.push_back(rat_at(x));
  return out;
}

RatInterval interval_at(const ordered_json& j) {
  if (j.size() != 2) throw Error(ErrorKind::ParseError, "interval must have two endpoints");
  return RatInterval(rat_at(j[0]), rat_at(j[1]));
}

ExhaustiveWitness exhaustive_from(const ordered_json& j) {
  ExhaustiveWitness w;
  for (const auto& l : j.at("levels")) {
    ExhaustiveLevel level;
    level.g = l.at("g").get<int>();
    level.dim = l.at("dim").get<std::size_t>();
    level.obstructed = l.at("obstructed").get<bool>();
    level.examined = l.at("examined").get<std::size_t>();
    for (const auto& b : l.at("bad")) {
      level.bad.push_back(
          SubspaceWitness{b.at("basis").get<Rows>(), b.at("chi").get<std::vector<int>>(), interval_at(b.at("interval"))});
    }
    if (!l.at("unobstructed_subspace").is_null()) level.unobstructed_subspace = l.at("unobstructed_subspace").get<Rows>();
    w.levels.push_back(std::move(level));
  }
  return w;
}

AnalyticWitness analytic_from(const ordered_json& j) {
  AnalyticWitness w;
  w.g = j.at("g").get<int>();
  w.dim = j.at("dim").get<std::size_t>();
  w.lower = rats_at(j.at("lower"));
  w.upper = rats_at(j.at("upper"));
  for (const auto& s : j.at("steps")) {
    AnalyticStep step{s.at("a").get<int>(), rat_at(s.at("lower")), rat_at(s.at("upper_sum")), std::nullopt};
    if (!s.at("isotropy_linking").is_null()) step.isotropy_linking = rat_at(s.at("isotropy_linking"));
    w.steps.push_back(std::move(step));
  }
  return w;
}

LinearWitness linear_from(const ordered_json& j) {
  LinearWitness w;
  w.n = j.at("n").get<std::int64_t>();
  w.orientation = j.at("orientation").get<int>();
  w.r_m = j.at("r_m").get<int>();
  w.b_minus = rat_at(j.at("b_minus"));
  w.b_plus = rat_at(j.at("b_plus"));
  w.c = rat_at(j.at("c"));
  for (const auto& s : j.at("steps")) {
    w.steps.push_back(LinearStep{s.at("g").get<int>(), s.at("k").get<std::int64_t>(), rat_at(s.at("lhs"))});
  }
  return w;
}

}  // namespace

ordered_json to_json(const BoundCertificate& c) {
  ordered_json summands = ordered_json::array();
  ordered_json tables = ordered_json::array();
  ordered_json linking = ordered_json::array();
  for (const auto& s : c.summands) {
    summands.push_back({s.a, s.signed_b});
    tables.push_back(rat_list(s.sigma));
    linking.push_back(s.linking.str());
  }
  ordered_json witnesses = std::visit([](const auto& w) { return witness_json(w); }, c.witnesses);
  witnesses["tables"] = std::move(tables);
  witnesses["linking"] = std::move(linking);

  ordered_json j;
  j["kind"] = std::string(to_string(c.kind));
  j["p"] = c.p;
  j["summands"] = std::move(summands);
  j["g_lower"] = c.g_lower;
  j["mode"] = c.mode ? ordered_json(std::string(to_string(*c.mode))) : ordered_json(nullptr);
  j["preconditions_checked"] = {{"classical_signature_zero", c.signature_zero}, {"half_rank", c.half_rank}};
  j["witnesses"] = std::move(witnesses);
  j["library_version"] = c.library_version;
  return j;
}

BoundCertificate certificate_from_json(const ordered_json& j) {
  try {
    BoundCertificate c;
    c.kind = parse_kind(j.at("kind").get<std::string>());
    c.p = j.at("p").get<int>();
    c.g_lower = j.at("g_lower").get<int>();
    if (!j.at("mode").is_null()) c.mode = parse_mode(j.at("mode").get<std::string>());
    c.signature_zero = j.at("preconditions_checked").at("classical_signature_zero").get<bool>();
    c.half_rank = j.at("preconditions_checked").at("half_rank").get<bool>();
    c.library_version = j.at("library_version").get<std::string>();

    const auto& w = j.at("witnesses");
    const auto& summands = j.at("summands");
    const auto& tables = w.at("tables");
    const auto& linking = w.at("linking");
    if (tables.size() != summands.size() || linking.size() != summands.size()) {
      throw Error(ErrorKind::ParseError, "tables/linking do not match the summand list");
    }
    for (std::size_t i = 0; i < summands.size(); ++i) {
      const auto& pair = summands[i];
      if (pair.size() != 2) throw Error(ErrorKind::ParseError, "summand must be [a, b]");
      c.summands.push_back(SummandData{pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>(), rats_at(tables[i]),
                                       rat_at(linking[i])});
    }
    switch (c.kind) {
      case CertificateKind::Exhaustive: c.witnesses = exhaustive_from(w); break;
      case CertificateKind::AnalyticEx1: c.witnesses = analytic_from(w); break;
      case CertificateKind::LinearEx2: c.witnesses = linear_from(w); break;
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed certificate: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ParseError, std::string("malformed certificate: ") + e.what());
  }
}

std::string serialize(const BoundCertificate& c) { return to_json(c).dump(2) + "\n"; }

BoundCertificate parse_certificate(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("certificate is not valid JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

// ---- replay --------------------------------------------------------------

namespace {

struct ReplayFailure {
  std::string detail;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw ReplayFailure{what};
}

Rat four(int g) { return Rat(4 * static_cast<std::int64_t>(g)); }

std::size_t dimension_for(std::size_t n, int g) {
  const auto twice = static_cast<std::size_t>(2 * g);
  return twice >= n ? 0 : (n - twice + 1) / 2;
}

RatInterval certified_interval(const SummandData& s, int r) {
  if (r == 0) return RatInterval::point(0);
  const Rat& sigma = s.sigma[static_cast<std::size_t>(r)];
  return RatInterval(sigma - 1, sigma + 1);
}

bool isotropic(const Rows& basis, const std::vector<SummandData>& summands) {
  for (std::size_t u = 0; u < basis.size(); ++u)
    for (std::size_t v = u; v < basis.size(); ++v) {
      Rat pairing;
      for (std::size_t i = 0; i < summands.size(); ++i) pairing += summands[i].linking * Rat(basis[u][i] * basis[v][i]);
      if (!pairing.frac().is_zero()) return false;
    }
  return true;
}

FpMatrix matrix_of(int p, std::size_t n, const Rows& rows) {
  FpMatrix m(p, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    expect(rows[i].size() == n, "basis row has the wrong length");
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void replay_tables(const BoundCertificate& c) {
  expect(c.signature_zero, "classical signature precondition not recorded");
  expect(c.half_rank, "n/2 precondition not recorded");
  expect(c.p >= 3 && c.p % 2 == 1 && is_prime(c.p), "p is not an odd prime");
  for (const auto& s : c.summands) {
    expect(s.sigma.size() == static_cast<std::size_t>(c.p), "table length differs from p");
    expect(s.sigma[0].is_zero(), "table entry r = 0 is not 0");
    for (int r = 1; r < c.p; ++r) {
      expect(s.sigma[static_cast<std::size_t>(r)] == s.sigma[static_cast<std::size_t>(c.p - r)],
             "table is not symmetric under r -> p - r");
    }
    expect((s.linking * Rat(c.p)).is_integer(), "linking value does not have order p");
  }
}

void replay_exhaustive(const BoundCertificate& c, const ExhaustiveWitness& w) {
  expect(c.mode.has_value(), "exhaustive certificate without a mode");
  const std::size_t n = c.summands.size();
  expect(c.g_lower >= 0 && static_cast<std::size_t>(c.g_lower) <= n / 2 + 1, "g_lower beyond floor(n/2) + 1");
  const auto levels = static_cast<std::size_t>(c.g_lower);
  expect(w.levels.size() == levels || w.levels.size() == levels + 1, "level count does not match g_lower");

  for (std::size_t idx = 0; idx < w.levels.size(); ++idx) {
    const ExhaustiveLevel& l = w.levels[idx];
    const int g = static_cast<int>(idx);
    expect(l.g == g, "levels are not consecutive from g = 0");
    expect(static_cast<std::size_t>(g) <= n / 2, "level beyond floor(n/2)");
    expect(l.dim == dimension_for(n, g), "level dimension is not ceil((n - 2g)/2)");
    const bool must_obstruct = idx < levels;
    expect(l.obstructed == must_obstruct, "obstruction flag inconsistent with g_lower");

    if (!l.obstructed) {
      expect(l.unobstructed_subspace.has_value(), "unobstructed level without its subspace");
      if (l.dim > 0) {
        const EchelonBasis b(matrix_of(c.p, n, *l.unobstructed_subspace));
        expect(b.dim() == l.dim, "unobstructed subspace has the wrong dimension");
        if (*c.mode == ObstructionMode::Isotropic)
          expect(isotropic(*l.unobstructed_subspace, c.summands), "unobstructed subspace is not isotropic");
      }
      continue;
    }

    expect(l.dim > 0, "the zero subspace cannot be obstructed");
    SubspaceStream stream(n, l.dim, c.p);
    std::size_t seen = 0;
    while (auto basis = stream.next()) {
      const FpMatrix& m = basis->matrix();
      Rows rows(m.rows(), std::vector<int>(n));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
      if (*c.mode == ObstructionMode::Isotropic && !isotropic(rows, c.summands)) continue;

      expect(seen < l.bad.size(), "a subspace has no recorded bad character");
      const SubspaceWitness& bad = l.bad[seen];
      expect(bad.basis == rows, "recorded subspace differs from the enumeration");
      expect(bad.chi.size() == n, "character has the wrong length");
      const FpVector chi(c.p, bad.chi);
      expect(!chi.is_zero() && basis->contains(chi), "bad character is not in its subspace");

      RatInterval total;
      for (std::size_t i = 0; i < n; ++i) total += certified_interval(c.summands[i], chi[i]);
      expect(total == bad.interval, "recorded interval differs from the table sum");
      expect(certified_abs_exceeds(total, four(g)), "bad character does not exceed 4g");
      ++seen;
    }
    expect(seen == l.bad.size() && seen == l.examined, "subspace count differs from the enumeration");
  }
}

void replay_analytic(const BoundCertificate& c, const AnalyticWitness& w) {
  const std::size_t n = c.summands.size();
  expect(w.g >= 0 && static_cast<std::size_t>(w.g) <= n / 2, "g outside [0, floor(n/2)]");
  expect(c.g_lower == w.g + 1, "g_lower is not g + 1");
  expect(w.dim == dimension_for(n, w.g) && w.dim >= 1, "dimension is not ceil((n - 2g)/2) >= 1");
  expect(w.lower.size() == n && w.upper.size() == n, "per-summand bounds missing");

  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Rat> lo;
    Rat hi(0);
    for (int r = 1; r < c.p; ++r) {
      const RatInterval iv = certified_interval(c.summands[i], r);
      const Rat side = max(iv.lo(), -iv.hi());
      lo = lo ? min(*lo, side) : side;
      hi = max(hi, iv.magnitude());
    }
    expect(w.lower[i] == *lo && w.upper[i] == hi, "per-summand bound differs from the table");
  }

  const std::size_t first = std::max<std::size_t>(w.dim, 1);
  expect(w.steps.size() == n - first + 1, "maximal-index steps do not cover [d, n]");
  Rat upper_sum;
  for (std::size_t i = 0; i + 1 < first; ++i) upper_sum += w.upper[i];
  for (std::size_t idx = 0; idx < w.steps.size(); ++idx) {
    const AnalyticStep& s = w.steps[idx];
    const std::size_t a = first + idx;
    expect(s.a == static_cast<int>(a), "step index out of order");
    expect(s.lower == w.lower[a - 1] && s.upper_sum == upper_sum, "step bounds differ from the tables");
    if (s.isotropy_linking) {
      expect(a == 1 && c.mode == ObstructionMode::Isotropic, "isotropy step outside a = 1 or without isotropic mode");
      expect(*s.isotropy_linking == c.summands[0].linking && !s.isotropy_linking->frac().is_zero(),
             "first coordinate line is isotropic");
    } else {
      expect(s.lower - s.upper_sum > four(w.g), "maximal-index inequality fails");
    }
    upper_sum += w.upper[a - 1];
  }
}

void replay_linear(const BoundCertificate& c, const LinearWitness& w) {
  expect(c.summands.size() == 1, "linear certificate needs exactly one summand");
  expect(w.n >= 0 && w.n % 2 == 0, "n is not even");
  expect(w.orientation == 1 || w.orientation == -1, "orientation must be +1 or -1");
  expect(w.r_m >= 1 && w.r_m < c.p, "r_m outside [1, p)");

  const SummandData& s = c.summands[0];
  Rat b_minus = -(s.sigma[1] * Rat(w.orientation) + 1);
  Rat b_plus(0);
  for (int r = 1; r < c.p; ++r) {
    const Rat hi = s.sigma[static_cast<std::size_t>(r)] * Rat(w.orientation) + 1;
    b_minus = max(b_minus, -hi);
    b_plus = max(b_plus, hi);
  }
  expect(w.b_minus == b_minus && w.b_plus == b_plus, "B- / B+ differ from the table");
  expect(-(s.sigma[static_cast<std::size_t>(w.r_m)] * Rat(w.orientation) + 1) == b_minus, "r_m does not attain B-");
  expect(b_minus > b_plus, "B- does not exceed B+");
  expect(w.c == Rat(2) * (Rat(4) + b_minus + b_plus) / (b_minus - b_plus), "c differs from 2(4 + B- + B+)/(B- - B+)");

  expect(c.g_lower >= 0 && c.g_lower <= w.n / 2 + 1, "g_lower beyond n/2 + 1");
  expect(w.steps.size() == static_cast<std::size_t>(c.g_lower), "steps do not cover g < g_lower");
  for (std::size_t idx = 0; idx < w.steps.size(); ++idx) {
    const LinearStep& st = w.steps[idx];
    expect(st.g == static_cast<int>(idx) && st.k == w.n / 2 - st.g, "step (g, k) out of order");
    expect(st.k >= 1, "constant-coordinate vector needs k >= 1");
    expect(st.lhs == Rat(st.k) * b_minus - Rat(w.n - st.k) * b_plus, "lhs differs from k B- - (n - k) B+");
    expect(st.lhs > four(st.g), "lhs does not exceed 4g");
  }
  if (c.g_lower > 0) expect(Rat(w.n) > w.c * Rat(c.g_lower - 1), "n <= c (g_lower - 1)");
}

}  // namespace

ReplayResult replay(const BoundCertificate& c) {
  try {
    replay_tables(c);
    switch (c.kind) {
      case CertificateKind::Exhaustive:
        expect(std::holds_alternative<ExhaustiveWitness>(c.witnesses), "witness kind mismatch");
        replay_exhaustive(c, std::get<ExhaustiveWitness>(c.witnesses));
        break;
      case CertificateKind::AnalyticEx1:
        expect(std::holds_alternative<AnalyticWitness>(c.witnesses), "witness kind mismatch");
        replay_analytic(c, std::get<AnalyticWitness>(c.witnesses));
        break;
      case CertificateKind::LinearEx2:
        expect(std::holds_alternative<LinearWitness>(c.witnesses), "witness kind mismatch");
        replay_linear(c, std::get<LinearWitness>(c.witnesses));
        break;
    }
  } catch (const ReplayFailure& f) {
    return {false, f.detail};
  } catch (const Error& e) {
    return {false, e.what()};
  }
  return {true, "all recorded inequalities re-verified"};
}

}  // namespace clasp
