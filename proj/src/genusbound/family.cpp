#include "clasp/genusbound/family.hpp"

#include <string>

#include "clasp/cassongordon/casson_gordon.hpp"
#include "clasp/error.hpp"
#include "clasp/genusbound/obstruction.hpp"
#include "clasp/version.hpp"

namespace clasp {

namespace {

constexpr int kFamilyPrime = 5;

Summand bm_summand(std::int64_t m) { return make_summand(4 * m * m + 1, 2 * m); }

Rat sigma_one(std::int64_t m) { return cg_sigma(bm_summand(m).chain(), 1, kFamilyPrime); }

// Smallest certified |sigma_1 tau| over the nontrivial characters; <= 0 if
// some interval contains 0.
Rat lower_magnitude(const SummandData& d) {
  std::optional<Rat> best;
  for (std::size_t r = 1; r < d.sigma.size(); ++r) {
    const Rat side = max(d.sigma[r] - 1, -(d.sigma[r] + 1));
    best = best ? min(*best, side) : side;
  }
  return best.value_or(Rat(0));
}

Rat upper_magnitude(const SummandData& d) {
  Rat best(0);
  for (std::size_t r = 1; r < d.sigma.size(); ++r) best = max(best, d.sigma[r].abs() + 1);
  return best;
}

}  // namespace

std::vector<std::int64_t> FamilyParams::m_values() const {
  std::vector<std::int64_t> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.m);
  return out;
}

SumSpec FamilyParams::sum() const {
  std::vector<Summand> summands;
  for (const auto& s : steps) summands.push_back(bm_summand(s.m));
  return SumSpec(std::move(summands), p);
}

FamilyParams greedy_family(int g) {
  if (g < 1) throw Error(ErrorKind::InvalidArgument, "family genus must be positive");
  FamilyParams f;
  f.g = g;
  f.p = kFamilyPrime;

  const Rat first = sigma_one(1);
  f.steps.push_back(FamilyStep{1, 0, 1, first - 1, first + 1, Rat(0)});
  Rat upper_sum = first + 1;
  std::int64_t k = 0;
  for (int j = 2; j <= 4 * g; ++j) {
    const Rat need = upper_sum + Rat(4 * static_cast<std::int64_t>(j));
    for (k += 5;; k += 5) {
      const std::int64_t m = 5 * k + 1;
      if (!p_torsion_admissible(bm_summand(m).knot, kFamilyPrime)) continue;
      const Rat sigma = sigma_one(m);
      if (sigma - 1 > need) {
        f.steps.push_back(FamilyStep{j, k, m, sigma - 1, sigma + 1, upper_sum});
        upper_sum += sigma + 1;
        break;
      }
    }
  }
  return f;
}

bool replay_family(const FamilyParams& f) {
  if (f.g < 1 || f.p != kFamilyPrime || f.steps.size() != static_cast<std::size_t>(4 * f.g)) return false;
  Rat upper_sum;
  std::int64_t prev_k = -1;
  for (std::size_t idx = 0; idx < f.steps.size(); ++idx) {
    const FamilyStep& s = f.steps[idx];
    if (s.j != static_cast<int>(idx) + 1 || s.k % 5 != 0 || s.k <= prev_k || s.m != 5 * s.k + 1) return false;
    if (idx == 0 && s.m != 1) return false;
    const Summand summand = bm_summand(s.m);
    if (!p_torsion_admissible(summand.knot, f.p)) return false;

    const CgTable t = cg_table(summand, f.p);
    const Rat& sigma = t[1];
    // chi_1 must realize both extremes for the one-character bounds to be valid.
    SummandData d{summand.knot.a, summand.signed_b(), t.values, Rat(0)};
    if (t[2] != -sigma || lower_magnitude(d) != sigma - 1 || upper_magnitude(d) != sigma + 1) return false;
    if (s.lower != sigma - 1 || s.upper != sigma + 1 || s.upper_before != upper_sum) return false;
    if (idx > 0 && !(s.lower > s.upper_before + Rat(4 * static_cast<std::int64_t>(s.j)))) return false;
    upper_sum += s.upper;
    prev_k = s.k;
  }
  return true;
}

BoundCertificate analytic_certificate(const SumSpec& s, int g) {
  require_signature_zero(s);
  const std::size_t n = s.size();
  if (g < 0 || static_cast<std::size_t>(g) > n / 2) {
    throw Error(ErrorKind::OutOfRange, "g = " + std::to_string(g) + " outside [0, floor(n/2)]");
  }
  AnalyticWitness w;
  w.g = g;
  w.dim = required_dimension(n, g);
  if (w.dim == 0) throw Error(ErrorKind::OutOfRange, "required subspace dimension is 0; nothing to certify");

  std::vector<SummandData> data;
  for (const auto& summand : s.summands()) {
    data.push_back(summand_data(summand, s.p()));
    w.lower.push_back(lower_magnitude(data.back()));
    w.upper.push_back(upper_magnitude(data.back()));
  }

  const Rat threshold(4 * static_cast<std::int64_t>(g));
  bool used_isotropy = false;
  Rat upper_sum;
  for (std::size_t i = 0; i < n; ++i) {
    const int a = static_cast<int>(i) + 1;
    if (i + 1 >= w.dim) {
      AnalyticStep step{a, w.lower[i], upper_sum, std::nullopt};
      if (!(step.lower - step.upper_sum > threshold)) {
        if (a != 1 || data[0].linking.frac().is_zero()) {
          throw Error(ErrorKind::FamilyNotCertifying,
                      "maximal index " + std::to_string(a) + ": L - sum U = " + (step.lower - step.upper_sum).str() +
                          " does not exceed " + threshold.str());
        }
        step.isotropy_linking = data[0].linking;
        used_isotropy = true;
      }
      w.steps.push_back(std::move(step));
    }
    upper_sum += w.upper[i];
  }

  BoundCertificate c;
  c.kind = CertificateKind::AnalyticEx1;
  c.p = s.p();
  c.summands = std::move(data);
  c.g_lower = g + 1;
  c.mode = used_isotropy ? ObstructionMode::Isotropic : ObstructionMode::Literal;
  c.signature_zero = true;
  c.half_rank = true;
  c.witnesses = std::move(w);
  c.library_version = kLibraryVersion;
  return c;
}

BoundCertificate analytic_certificate_ex1(const FamilyParams& f, int g) { return analytic_certificate(f.sum(), g); }

BoundCertificate analytic_certificate_ex1(const std::vector<std::int64_t>& m_values, int g) {
  std::vector<Summand> summands;
  for (auto m : m_values) summands.push_back(bm_summand(m));
  return analytic_certificate(SumSpec(std::move(summands), kFamilyPrime), g);
}

}  // namespace clasp
