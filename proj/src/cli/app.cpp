#include "clasp/cli/app.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "clasp/cli/cache.hpp"
#include "clasp/cli/claims.hpp"
#include "clasp/error.hpp"
#include "clasp/exactmath/snf.hpp"
#include "clasp/genusbound/family.hpp"
#include "clasp/genusbound/linear.hpp"
#include "clasp/genusbound/obstruction.hpp"
#include "clasp/knotmodel/seifert.hpp"
#include "clasp/version.hpp"

namespace clasp {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::FamilyNotCertifying:
    case ErrorKind::NoLinearBound:
    case ErrorKind::DegenerateForm:
      return kExitMath;
    default:
      return kExitUsage;
  }
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream ss;
  ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return ss.str();
}

struct Context {
  std::vector<std::string> args;
  std::ostream& out;
  bool no_timestamp = false;
  bool no_cache = false;

  void emit(const std::string& name, ordered_json payload) const {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = {{"name", name}, {"args", args}};
    if (!no_timestamp) doc["generated_at"] = utc_now();
    doc["payload"] = std::move(payload);
    out << doc.dump(2) << "\n";
  }

  CgTable table(const Summand& s, int p) const {
    if (no_cache) return cg_table(s, p);
    return TableCache(TableCache::default_dir()).get(s, p);
  }
};

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_i64(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json record_json(const KnotRecord& r) {
  const auto opt = [](const auto& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
  return {{"knot", r.knot.name()}, {"c_plus", opt(r.c_plus)},       {"c_minus", opt(r.c_minus)},
          {"c", opt(r.c)},         {"g4_upper", opt(r.g4_upper)},   {"amphicheiral", opt(r.amphicheiral)},
          {"witnesses", r.witnesses}, {"consistent", clasp_record_check(r)}};
}

std::optional<KnotRecord> known_record(const TwoBridgeKnot& k) {
  for (std::int64_t m = 1; 4 * m * m + 1 <= k.a; ++m)
    if (k.a == 4 * m * m + 1 && k.b == 2 * m) return bm_family(m).record;
  if (k.b == 2 && (k.a - 1) % 4 == 0) return twist_knot((k.a - 1) / 4).record;
  return std::nullopt;
}

// ---- invariants ----------------------------------------------------------

int cmd_invariants(const Context& ctx, std::int64_t a, std::int64_t b) {
  const Summand s = make_summand(a, b);
  ordered_json p;
  p["knot"] = s.name();
  p["a"] = s.knot.a;
  p["b"] = s.signed_b();
  std::optional<ChainPresentation> chain;
  try {
    chain = s.chain();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedPresentation) throw;
    p["chain_note"] = e.what();
  }
  // With a chain the order is cross-checked against its Smith form;
  // otherwise it is read off the lens space L(a, b).
  const std::int64_t order = chain ? double_cover_homology(s.knot) : s.knot.a;
  p["homology"] = "Z_" + std::to_string(order);
  p["chain_matrix"] = chain ? matrix_json(chain->lambda()) : ordered_json(nullptr);
  if (chain) p["chain_smith_form"] = {snf(chain->lambda()).d[0].get_str(), snf(chain->lambda()).d[1].get_str()};

  std::optional<SeifertForm> seifert;
  if (chain) {
    try {
      seifert = seifert_from_chain(*chain);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsupportedPresentation) throw;
      p["seifert_note"] = e.what();
    }
  }
  p["seifert_matrix"] = seifert ? matrix_json(seifert->matrix()) : ordered_json(nullptr);
  p["determinant"] = seifert ? to_i64(seifert->determinant()) : order;
  p["signature"] = seifert ? ordered_json(classical_signature(*seifert)) : ordered_json(nullptr);

  const auto rec = known_record(s.knot);
  p["record"] = rec ? record_json(*rec) : ordered_json(nullptr);
  ctx.emit("invariants", std::move(p));
  return kExitOk;
}

// ---- cg-table ------------------------------------------------------------

int cmd_cg_table(const Context& ctx, std::int64_t a, std::int64_t b, int p, bool csv) {
  const CgTable t = ctx.table(make_summand(a, b), p);
  if (csv) {
    ctx.out << "r,sigma,interval_lo,interval_hi\n";
    for (int r = 0; r < p; ++r) {
      const RatInterval iv = sigma_tau_interval(t, r).certified();
      ctx.out << r << "," << t[r].str() << "," << iv.lo().str() << "," << iv.hi().str() << "\n";
    }
    return kExitOk;
  }
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < p; ++r) {
    const RatInterval iv = sigma_tau_interval(t, r).certified();
    rows.push_back({{"r", r}, {"sigma", t[r].str()}, {"interval", {iv.lo().str(), iv.hi().str()}}});
  }
  ctx.emit("cg-table", {{"knot", t.summand.name()},
                        {"a", t.summand.knot.a},
                        {"b", t.summand.signed_b()},
                        {"p", p},
                        {"consistent", table_is_consistent(t)},
                        {"rows", std::move(rows)}});
  return kExitOk;
}

// ---- bound ---------------------------------------------------------------

struct SpecFile {
  int p = 0;
  std::vector<Summand> summands;
  std::optional<ObstructionMode> mode;
  std::optional<int> target_g;
};

SpecFile read_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read spec file '" + path + "'");
  try {
    const ordered_json j = ordered_json::parse(in);
    SpecFile s;
    s.p = j.at("p").get<int>();
    for (const auto& pair : j.at("summands")) {
      if (pair.size() != 2) throw Error(ErrorKind::ParseError, "summand must be [a, b]");
      s.summands.push_back(make_summand(pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>()));
    }
    if (j.contains("mode") && !j["mode"].is_null()) s.mode = parse_mode(j["mode"].get<std::string>());
    if (j.contains("target_g") && !j["target_g"].is_null()) s.target_g = j["target_g"].get<int>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, "spec file '" + path + "': " + e.what());
  }
}

struct BoundArgs {
  std::string spec_path;
  bool exhaustive = false;
  bool analytic = false;
  bool linear = false;
  bool literal = false;
  bool isotropic = false;
  std::optional<int> genus;
  std::optional<int> expect;
  std::string knot;
  std::optional<int> p;
  std::optional<std::int64_t> n;
};

std::pair<std::int64_t, std::int64_t> parse_knot(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument("no slash");
    std::size_t used_a = 0, used_b = 0;
    const std::int64_t a = std::stoll(text.substr(0, slash), &used_a);
    const std::int64_t b = std::stoll(text.substr(slash + 1), &used_b);
    if (used_a != slash || used_b != text.size() - slash - 1) throw std::invalid_argument("trailing");
    return {a, b};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "--knot expects A/B, got '" + text + "'");
  }
}

ordered_json level_summary(const ExhaustiveLevel& l) {
  ordered_json j{{"g", l.g}, {"dim", l.dim}, {"obstructed", l.obstructed}, {"examined", l.examined}};
  if (l.unobstructed_subspace) j["witness_subspace"] = *l.unobstructed_subspace;
  return j;
}

int cmd_bound(const Context& ctx, const BoundArgs& a) {
  const int selected = int(a.exhaustive) + int(a.analytic) + int(a.linear);
  if (selected != 1) throw Error(ErrorKind::InvalidArgument, "choose exactly one of --exhaustive, --analytic-ex1, --linear-ex2");

  std::optional<SpecFile> spec;
  if (!a.spec_path.empty()) spec = read_spec(a.spec_path);
  const int target = a.expect.value_or(spec && spec->target_g ? *spec->target_g : -1);

  ordered_json summary;
  BoundCertificate cert;
  if (a.linear) {
    if (a.knot.empty() || !a.p || !a.n) throw Error(ErrorKind::InvalidArgument, "--linear-ex2 needs --knot, --p and --n");
    const auto [ka, kb] = parse_knot(a.knot);
    cert = linear_bound(*a.n, ctx.table(make_summand(ka, kb), *a.p));
    const auto& w = std::get<LinearWitness>(cert.witnesses);
    summary = {{"n", w.n},          {"c", w.c.str()},   {"b_minus", w.b_minus.str()}, {"b_plus", w.b_plus.str()},
               {"r_m", w.r_m},      {"orientation", w.orientation}};
  } else if (a.analytic) {
    if (spec) {
      const std::optional<int> g = a.genus ? a.genus : (spec->target_g ? std::optional<int>(*spec->target_g - 1) : std::nullopt);
      if (!g) throw Error(ErrorKind::InvalidArgument, "--analytic-ex1 with a spec file needs --genus or target_g");
      cert = analytic_certificate(SumSpec(spec->summands, spec->p), *g);
    } else {
      const int g = a.genus.value_or(1);
      const FamilyParams f = greedy_family(g);
      cert = analytic_certificate_ex1(f, g);
      summary["family"] = f.m_values();
    }
  } else {
    ObstructionConfig cfg;
    if (spec && spec->mode) cfg.mode = *spec->mode;
    if (a.literal) cfg.mode = ObstructionMode::Literal;
    if (a.isotropic) cfg.mode = ObstructionMode::Isotropic;
    if (spec) {
      cert = genus_lower_bound(SumSpec(spec->summands, spec->p), cfg);
    } else {
      const FamilyParams f = greedy_family(a.genus.value_or(1));
      summary["family"] = f.m_values();
      cert = genus_lower_bound(f.sum(), cfg);
    }
    ordered_json levels = ordered_json::array();
    for (const auto& l : std::get<ExhaustiveWitness>(cert.witnesses).levels) levels.push_back(level_summary(l));
    summary["levels"] = std::move(levels);
  }

  const ReplayResult rep = replay(cert);
  summary["g_lower"] = cert.g_lower;
  if (cert.mode) summary["mode"] = std::string(to_string(*cert.mode));
  ordered_json payload{{"kind", std::string(to_string(cert.kind))},
                       {"g_lower", cert.g_lower},
                       {"summary", std::move(summary)},
                       {"replay", {{"ok", rep.ok}, {"detail", rep.detail}}},
                       {"certificate", to_json(cert)}};
  if (target >= 0) payload["expect"] = {{"g", target}, {"met", cert.g_lower >= target}};
  ctx.emit("bound", std::move(payload));
  if (!rep.ok) return kExitMath;
  return cert.g_lower < target ? kExitMath : kExitOk;
}

// ---- family --------------------------------------------------------------

int cmd_family(const Context& ctx, int g) {
  const FamilyParams f = greedy_family(g);
  ordered_json members = ordered_json::array();
  for (const auto& s : f.steps) {
    members.push_back({{"j", s.j},
                       {"k", s.k},
                       {"m", s.m},
                       {"lower", s.lower.str()},
                       {"upper", s.upper.str()},
                       {"upper_before", s.upper_before.str()},
                       {"threshold", (s.upper_before + Rat(4 * static_cast<std::int64_t>(s.j))).str()}});
  }
  const bool ok = replay_family(f);
  ctx.emit("family", {{"g", f.g}, {"p", f.p}, {"m_values", f.m_values()}, {"members", std::move(members)}, {"replay_ok", ok}});
  return ok ? kExitOk : kExitMath;
}

// ---- reproduce-paper -----------------------------------------------------

int cmd_reproduce(const Context& ctx, bool json) {
  ClaimOptions opts;
  if (!ctx.no_cache) opts.cache_dir = TableCache::default_dir();
  const std::vector<ClaimResult> results = run_paper_claims(opts);
  const bool ok = all_passed(results);
  if (json) {
    ordered_json claims = ordered_json::array();
    for (const auto& r : results) {
      ordered_json c{{"criterion", r.criterion}, {"location", r.location}, {"title", r.title},
                     {"passed", r.passed},       {"detail", r.detail}};
      if (!ctx.no_timestamp) c["seconds"] = r.seconds;
      claims.push_back(std::move(c));
    }
    ctx.emit("reproduce-paper", {{"all_passed", ok}, {"claims", std::move(claims)}});
  } else {
    std::size_t passed = 0;
    for (const auto& r : results) {
      passed += r.passed ? 1 : 0;
      ctx.out << (r.passed ? "PASS" : "FAIL") << "  [" << (r.criterion ? std::to_string(r.criterion) : "cache") << "] "
              << r.location << ": " << r.title << " -- " << r.detail;
      if (!ctx.no_timestamp) ctx.out << " (" << std::fixed << std::setprecision(3) << r.seconds << " s)";
      ctx.out << "\n";
    }
    ctx.out << passed << "/" << results.size() << " claims passed\n";
  }
  return ok ? kExitOk : kExitMath;
}

// ---- replay --------------------------------------------------------------

int cmd_replay(const Context& ctx, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read certificate '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  ordered_json j;
  try {
    j = ordered_json::parse(text.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("certificate is not valid JSON: ") + e.what());
  }
  // Accept a bare certificate or a `bound` output document.
  if (j.contains("payload") && j["payload"].contains("certificate")) j = j["payload"]["certificate"];
  const BoundCertificate cert = certificate_from_json(j);
  const ReplayResult r = replay(cert);
  ctx.emit("replay", {{"kind", std::string(to_string(cert.kind))},
                      {"g_lower", cert.g_lower},
                      {"ok", r.ok},
                      {"detail", r.detail}});
  return r.ok ? kExitOk : kExitMath;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casson-Gordon invariants of two-bridge knots and four-genus certificates", "clasp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kLibraryVersion));

  Context ctx{args, out};
  const auto common = [&](CLI::App* sub, bool cache) {
    sub->add_flag("--no-timestamp", ctx.no_timestamp, "Omit time-dependent fields");
    if (cache) sub->add_flag("--no-cache", ctx.no_cache, "Bypass the table cache");
  };

  std::int64_t a = 0, b = 0;
  int p = 0, genus = 0;
  bool csv = false, json = false;
  std::string cert_path;
  BoundArgs bound;

  auto* inv = app.add_subcommand("invariants", "Determinant, signature, homology and chain data of B(a,b)");
  inv->add_option("a", a, "Odd determinant a")->required();
  inv->add_option("b", b, "b coprime to a; negative for the mirror")->required();
  common(inv, false);

  auto* table = app.add_subcommand("cg-table", "Casson-Gordon signatures and sigma_1 tau intervals");
  table->add_option("a", a)->required();
  table->add_option("b", b)->required();
  table->add_option("--p", p, "Odd prime exactly dividing a")->required();
  table->add_flag("--csv", csv, "CSV instead of JSON");
  common(table, true);

  auto* bnd = app.add_subcommand("bound", "Certify a four-genus lower bound");
  bnd->add_option("spec", bound.spec_path, "JSON spec file {p, summands, mode, target_g}")->check(CLI::ExistingFile);
  auto* ex = bnd->add_flag("--exhaustive", bound.exhaustive, "Subspace enumeration");
  auto* an = bnd->add_flag("--analytic-ex1", bound.analytic, "Maximal-index argument on a B_m family");
  auto* li = bnd->add_flag("--linear-ex2", bound.linear, "Linear bound for n copies of one knot");
  ex->excludes(an)->excludes(li);
  an->excludes(li);
  auto* lit = bnd->add_flag("--literal", bound.literal, "Examine every subspace");
  auto* iso = bnd->add_flag("--isotropic", bound.isotropic, "Examine isotropic subspaces only (default)");
  lit->excludes(iso);
  bnd->add_option("--genus", bound.genus, "Family genus / analytic target g")->check(CLI::Range(0, 1000000));
  bnd->add_option("--expect", bound.expect, "Exit 1 unless g_lower reaches this value");
  bnd->add_option("--knot", bound.knot, "A/B for --linear-ex2");
  bnd->add_option("--p", bound.p, "Prime for --linear-ex2");
  bnd->add_option("--n", bound.n, "Number of copies for --linear-ex2");
  common(bnd, true);

  auto* fam = app.add_subcommand("family", "Greedy B_m family for a target genus");
  fam->add_option("--genus", genus, "Target genus (>= 1)")->required()->check(CLI::Range(1, 1000000));
  common(fam, false);

  auto* repro = app.add_subcommand("reproduce-paper", "Check every reproduced claim");
  repro->add_flag("--json", json, "Machine-readable report");
  common(repro, true);

  auto* rep = app.add_subcommand("replay", "Re-verify a certificate file");
  rep->add_option("certificate", cert_path)->required();
  common(rep, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*inv) return cmd_invariants(ctx, a, b);
    if (*table) return cmd_cg_table(ctx, a, b, p, csv);
    if (*bnd) return cmd_bound(ctx, bound);
    if (*fam) return cmd_family(ctx, genus);
    if (*repro) return cmd_reproduce(ctx, json);
    if (*rep) return cmd_replay(ctx, cert_path);
  } catch (const Error& e) {
    err << "clasp: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    err << "clasp: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace clasp
