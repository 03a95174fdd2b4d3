#pragma once

#include <optional>
#include <vector>

#include "clasp/cassongordon/casson_gordon.hpp"
#include "clasp/genusbound/certificate.hpp"
#include "clasp/knotmodel/sum.hpp"

namespace clasp {

struct ObstructionConfig {
  ObstructionMode mode = ObstructionMode::Isotropic;
  /// Scan ceiling; must not exceed floor(n/2).
  std::optional<int> g_max;
};

/// Table and self-linking of one summand at p, as stored in certificates.
SummandData summand_data(const Summand& s, int p);

/// Throws Error{PreconditionViolation} unless the sum has classical
/// signature 0 (including when a summand's signature is not modelled).
void require_signature_zero(const SumSpec& s);

/// Dimension ceil((n - 2g) / 2) of the subspace of characters that must
/// satisfy |sigma_1 tau| <= 4 g4 when g4 <= g.
std::size_t required_dimension(std::size_t n, int g);

/// True iff the linking form vanishes on every pair of basis rows, with
/// coordinate i of a character tuple paired through linking[i].
bool is_isotropic(const Rows& basis, const std::vector<Rat>& linking);

/// Subspace obstruction check for one genus. Tables are computed once and reused.
class ObstructionEngine {
 public:
  /// Throws Error{PreconditionViolation} for a nonzero signature and
  /// Error{OutOfRange} if cfg.g_max exceeds floor(n/2).
  ObstructionEngine(const SumSpec& s, ObstructionConfig cfg = {});

  std::size_t size() const { return data_.size(); }
  int p() const { return p_; }
  const ObstructionConfig& config() const { return cfg_; }
  const std::vector<SummandData>& summands() const { return data_; }

  /// Every d-dimensional subspace (isotropic ones only in that mode) is
  /// searched for a character whose certified interval exceeds 4g in
  /// absolute value. Stops at the first subspace without one.
  /// Throws Error{OutOfRange} unless 0 <= g <= floor(n/2).
  ExhaustiveLevel level(int g) const;

  /// Scans g = 0, 1, ... while obstructed, up to g_max (default floor(n/2)).
  BoundCertificate lower_bound() const;

 private:
  std::vector<SummandData> data_;
  std::vector<std::vector<RatInterval>> intervals_;
  std::vector<Rat> linking_;
  int p_;
  ObstructionConfig cfg_;
};

struct ObstructionResult {
  bool obstructed = false;
  ExhaustiveLevel witnesses;
};

ObstructionResult obstructed(const SumSpec& s, int g, const ObstructionConfig& cfg = {});
BoundCertificate genus_lower_bound(const SumSpec& s, const ObstructionConfig& cfg = {});

}  // namespace clasp
