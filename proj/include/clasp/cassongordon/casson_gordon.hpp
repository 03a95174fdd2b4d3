#pragma once

#include <array>
#include <span>
#include <vector>

#include "clasp/exactmath/finite_field.hpp"
#include "clasp/exactmath/interval.hpp"
#include "clasp/knotmodel/sum.hpp"
#include "clasp/knotmodel/two_bridge.hpp"

namespace clasp {

/// Z_p-valued character on H_1 of the double branched cover, recorded by
/// its values on the two chain meridians. `meridian_values` are least
/// positive residues, or both zero for the trivial character (r = 0).
struct Character {
  int p = 0;
  int r = 0;
  std::array<int, 2> meridian_values{0, 0};
};

/// Generator of ker(lambda mod p), scaled so its second coordinate is 1.
/// Errors: Error{InadmissiblePrime} unless p | det and p^2 does not divide
/// det; Error{UnsupportedCharacter} if a generator coordinate vanishes.
FpVector character_generator(const ChainPresentation& chain, int p);

/// chi_r = r * generator.
Character character(const ChainPresentation& chain, int r, int p);

/// Casson-Gordon signature of chi_r from the chain linking matrix:
///
///   sigma = (2 / p^2) * a^T lambda (p - a) - sign(lambda_11)
///
/// where a holds the meridian values of chi_r lifted to {1, ..., p-1}.
/// The constant is -1 on every unmirrored chain and flips under mirroring,
/// so mirror images have opposite signatures. r = 0 gives 0.
Rat cg_sigma(const ChainPresentation& chain, int r, int p);

/// sigma(chi_r) for r = 0, ..., p-1.
struct CgTable {
  Summand summand;
  int p = 0;
  std::vector<Rat> values;

  const Rat& operator[](int r) const { return values[static_cast<std::size_t>(r)]; }
};

CgTable cg_table(const Summand& s, int p);
CgTable cg_table(const TwoBridgeKnot& k, int p);
/// Checks values[0] = 0 and values[r] = values[p - r].
bool table_is_consistent(const CgTable& t);

/// The lens-space bracket |sigma - sigma_1 tau| <= 1 for one character.
struct SigmaTauInterval {
  int r = 0;
  Rat sigma;

  /// [sigma - 1, sigma + 1]
  RatInterval bracket() const { return RatInterval(sigma - 1, sigma + 1); }
  /// bracket(), except the trivial character where sigma_1 tau is exactly 0.
  RatInterval certified() const { return r == 0 ? RatInterval::point(0) : bracket(); }
};

SigmaTauInterval sigma_tau_interval(const CgTable& t, int r);
SigmaTauInterval sigma_tau_interval(const Summand& s, int r, int p);

/// Per-summand tables of a connected sum, for repeated interval queries.
class SumIntervals {
 public:
  explicit SumIntervals(const SumSpec& spec);
  /// From precomputed tables (all at the same prime).
  SumIntervals(std::vector<CgTable> tables, int p);

  int p() const { return p_; }
  std::size_t size() const { return tables_.size(); }
  const CgTable& table(std::size_t i) const { return tables_[i]; }
  const RatInterval& certified(std::size_t i, int r) const {
    return certified_[i][static_cast<std::size_t>(r)];
  }

  /// interval_sum of the certified per-summand intervals of chi = (r_1, ..., r_n).
  /// Throws Error{InvalidArgument} on a length mismatch or r outside [0, p).
  RatInterval operator()(std::span<const int> chi) const;

 private:
  std::vector<CgTable> tables_;
  std::vector<std::vector<RatInterval>> certified_;
  int p_;
};

RatInterval sum_sigma_tau_interval(const SumSpec& spec, std::span<const int> chi);

}  // namespace clasp
