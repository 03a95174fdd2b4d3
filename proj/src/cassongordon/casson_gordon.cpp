#include "clasp/cassongordon/casson_gordon.hpp"

#include <string>

#include "clasp/error.hpp"

namespace clasp {

FpVector character_generator(const ChainPresentation& chain, int p) {
  require_odd_prime(p);
  const BigInt det = ::abs(chain.lambda().det());
  const BigInt pp = BigInt(p) * p;
  if (mpz_divisible_ui_p(det.get_mpz_t(), static_cast<unsigned long>(p)) == 0) {
    throw Error(ErrorKind::InadmissiblePrime,
                "p = " + std::to_string(p) + " does not divide det = " + det.get_str());
  }
  if (mpz_divisible_p(det.get_mpz_t(), pp.get_mpz_t()) != 0) {
    throw Error(ErrorKind::InadmissiblePrime,
                "p^2 = " + pp.get_str() + " divides det = " + det.get_str() + "; p-torsion is not Z_p");
  }

  const auto kernel = fp_kernel(chain.lambda(), p);
  if (kernel.size() != 1) {
    throw Error(ErrorKind::InadmissiblePrime, "kernel of lambda mod p is not one-dimensional");
  }
  const FpVector& v = kernel.front();
  if (v[1] == 0) throw Error(ErrorKind::UnsupportedCharacter, "kernel generator vanishes on the second meridian");
  FpVector g = v.scaled(inv_mod(v[1], p));
  if (g[0] == 0) throw Error(ErrorKind::UnsupportedCharacter, "kernel generator vanishes on the first meridian");
  return g;
}

Character character(const ChainPresentation& chain, int r, int p) {
  const FpVector g = character_generator(chain, p);
  if (r < 0 || r >= p) throw Error(ErrorKind::InvalidArgument, "character index out of range");
  const FpVector a = g.scaled(r);
  return Character{p, r, {a[0], a[1]}};
}

Rat cg_sigma(const ChainPresentation& chain, int r, int p) {
  const Character chi = character(chain, r, p);
  if (r == 0) return Rat(0);

  const IntMatrix& lambda = chain.lambda();
  BigInt quad = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      quad += BigInt(chi.meridian_values[i]) * lambda(i, j) * (p - chi.meridian_values[j]);

  const int constant = -sgn(lambda(0, 0));
  return Rat(2 * quad, BigInt(p) * p) + Rat(constant);
}

CgTable cg_table(const Summand& s, int p) {
  const ChainPresentation chain = s.chain();
  (void)character_generator(chain, p);  // fail early with the divisibility diagnostic
  CgTable t{s, p, {}};
  t.values.reserve(static_cast<std::size_t>(p));
  for (int r = 0; r < p; ++r) t.values.push_back(cg_sigma(chain, r, p));
  return t;
}

CgTable cg_table(const TwoBridgeKnot& k, int p) { return cg_table(Summand{k, false}, p); }

bool table_is_consistent(const CgTable& t) {
  if (t.p <= 0 || t.values.size() != static_cast<std::size_t>(t.p) || !t.values[0].is_zero()) return false;
  for (int r = 1; r < t.p; ++r)
    if (t[r] != t[t.p - r]) return false;
  return true;
}

SigmaTauInterval sigma_tau_interval(const CgTable& t, int r) {
  if (r < 0 || r >= t.p) throw Error(ErrorKind::InvalidArgument, "character index out of range");
  return SigmaTauInterval{r, t[r]};
}

SigmaTauInterval sigma_tau_interval(const Summand& s, int r, int p) {
  return SigmaTauInterval{r, cg_sigma(s.chain(), r, p)};
}

namespace {

std::vector<CgTable> tables_for(const SumSpec& spec) {
  std::vector<CgTable> tables;
  tables.reserve(spec.size());
  for (const auto& s : spec.summands()) tables.push_back(cg_table(s, spec.p()));
  return tables;
}

}  // namespace

SumIntervals::SumIntervals(const SumSpec& spec) : SumIntervals(tables_for(spec), spec.p()) {}

SumIntervals::SumIntervals(std::vector<CgTable> tables, int p) : tables_(std::move(tables)), p_(p) {
  certified_.reserve(tables_.size());
  for (const auto& t : tables_) {
    if (t.p != p || t.values.size() != static_cast<std::size_t>(p)) {
      throw Error(ErrorKind::InvalidArgument, "table prime mismatch");
    }
    std::vector<RatInterval> row;
    row.reserve(t.values.size());
    for (int r = 0; r < p; ++r) row.push_back(sigma_tau_interval(t, r).certified());
    certified_.push_back(std::move(row));
  }
}

RatInterval SumIntervals::operator()(std::span<const int> chi) const {
  if (chi.size() != tables_.size()) throw Error(ErrorKind::InvalidArgument, "character length mismatch");
  RatInterval acc;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (chi[i] < 0 || chi[i] >= p_) throw Error(ErrorKind::InvalidArgument, "character index out of range");
    acc += certified_[i][static_cast<std::size_t>(chi[i])];
  }
  return acc;
}

RatInterval sum_sigma_tau_interval(const SumSpec& spec, std::span<const int> chi) {
  return SumIntervals(spec)(chi);
}

}  // namespace clasp
