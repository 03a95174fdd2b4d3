#include "clasp/genusbound/obstruction.hpp"

#include <string>

#include "clasp/error.hpp"
#include "clasp/exactmath/subspaces.hpp"
#include "clasp/version.hpp"

namespace clasp {

SummandData summand_data(const Summand& s, int p) {
  return SummandData{s.knot.a, s.signed_b(), cg_table(s, p).values, p_torsion_linking(s, p)};
}

void require_signature_zero(const SumSpec& s) {
  int sigma = 0;
  try {
    sigma = classical_signature(s);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedPresentation) throw;
    throw Error(ErrorKind::PreconditionViolation,
                std::string("hypothesis \"classical signature 0\" cannot be checked: ") + e.what());
  }
  if (sigma != 0) {
    throw Error(ErrorKind::PreconditionViolation,
                "hypothesis \"classical signature 0\" violated: signature is " + std::to_string(sigma));
  }
}

std::size_t required_dimension(std::size_t n, int g) {
  const auto twice = static_cast<std::size_t>(2 * g);
  return twice >= n ? 0 : (n - twice + 1) / 2;
}

bool is_isotropic(const Rows& basis, const std::vector<Rat>& linking) {
  for (std::size_t u = 0; u < basis.size(); ++u) {
    for (std::size_t v = u; v < basis.size(); ++v) {
      Rat pairing;
      for (std::size_t i = 0; i < linking.size(); ++i) {
        const int prod = basis[u][i] * basis[v][i];
        if (prod != 0) pairing += linking[i] * Rat(prod);
      }
      if (!pairing.frac().is_zero()) return false;
    }
  }
  return true;
}

namespace {

Rows to_rows(const FpMatrix& m) {
  Rows rows(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

// Next nonzero coefficient vector in lexicographic order, last entry least
// significant. Returns false after (p-1, ..., p-1).
bool next_coefficients(std::vector<int>& c, int p) {
  for (std::size_t i = c.size(); i-- > 0;) {
    if (++c[i] < p) return true;
    c[i] = 0;
  }
  return false;
}

}  // namespace

ObstructionEngine::ObstructionEngine(const SumSpec& s, ObstructionConfig cfg) : p_(s.p()), cfg_(cfg) {
  require_signature_zero(s);
  if (cfg_.g_max) {
    if (*cfg_.g_max < 0) throw Error(ErrorKind::InvalidArgument, "g_max must be non-negative");
    if (static_cast<std::size_t>(*cfg_.g_max) > s.size() / 2) {
      throw Error(ErrorKind::OutOfRange, "g_max exceeds floor(n/2) = " + std::to_string(s.size() / 2));
    }
  }
  for (const auto& summand : s.summands()) {
    SummandData d = summand_data(summand, p_);
    std::vector<RatInterval> row;
    row.reserve(d.sigma.size());
    for (int r = 0; r < p_; ++r) row.push_back(SigmaTauInterval{r, d.sigma[static_cast<std::size_t>(r)]}.certified());
    intervals_.push_back(std::move(row));
    linking_.push_back(d.linking);
    data_.push_back(std::move(d));
  }
}

ExhaustiveLevel ObstructionEngine::level(int g) const {
  const std::size_t n = data_.size();
  if (g < 0 || static_cast<std::size_t>(g) > n / 2) {
    throw Error(ErrorKind::OutOfRange, "g = " + std::to_string(g) + " outside [0, floor(n/2)]");
  }
  ExhaustiveLevel out;
  out.g = g;
  out.dim = required_dimension(n, g);
  if (out.dim == 0) {
    // Only chi = 0 remains, with interval [0, 0].
    out.examined = 1;
    out.unobstructed_subspace = Rows{};
    return out;
  }

  const Rat threshold(4 * static_cast<std::int64_t>(g));
  SubspaceStream stream(n, out.dim, p_);
  while (auto basis = stream.next()) {
    Rows rows = to_rows(basis->matrix());
    if (cfg_.mode == ObstructionMode::Isotropic && !is_isotropic(rows, linking_)) continue;
    ++out.examined;

    std::vector<int> coeffs(out.dim, 0);
    std::optional<SubspaceWitness> bad;
    while (next_coefficients(coeffs, p_)) {
      const FpVector chi = basis->matrix().combine(coeffs);
      RatInterval total;
      for (std::size_t i = 0; i < n; ++i) total += intervals_[i][static_cast<std::size_t>(chi[i])];
      if (certified_abs_exceeds(total, threshold)) {
        bad = SubspaceWitness{rows, {chi.entries().begin(), chi.entries().end()}, total};
        break;
      }
    }
    if (!bad) {
      out.obstructed = false;
      out.unobstructed_subspace = std::move(rows);
      return out;
    }
    out.bad.push_back(std::move(*bad));
  }
  out.obstructed = true;
  return out;
}

BoundCertificate ObstructionEngine::lower_bound() const {
  const int g_max = cfg_.g_max.value_or(static_cast<int>(data_.size() / 2));
  ExhaustiveWitness w;
  int g_lower = g_max + 1;
  for (int g = 0; g <= g_max; ++g) {
    w.levels.push_back(level(g));
    if (!w.levels.back().obstructed) {
      g_lower = g;
      break;
    }
  }
  BoundCertificate c;
  c.kind = CertificateKind::Exhaustive;
  c.p = p_;
  c.summands = data_;
  c.g_lower = g_lower;
  c.mode = cfg_.mode;
  c.signature_zero = true;
  c.half_rank = true;
  c.witnesses = std::move(w);
  c.library_version = kLibraryVersion;
  return c;
}

ObstructionResult obstructed(const SumSpec& s, int g, const ObstructionConfig& cfg) {
  ExhaustiveLevel lvl = ObstructionEngine(s, cfg).level(g);
  const bool ob = lvl.obstructed;
  return ObstructionResult{ob, std::move(lvl)};
}

BoundCertificate genus_lower_bound(const SumSpec& s, const ObstructionConfig& cfg) {
  return ObstructionEngine(s, cfg).lower_bound();
}

}  // namespace clasp
