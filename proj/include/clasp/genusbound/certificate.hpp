#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "clasp/exactmath/interval.hpp"
#include "clasp/exactmath/rational.hpp"

namespace clasp {

enum class CertificateKind { Exhaustive, AnalyticEx1, LinearEx2 };

/// literal: every subspace of the required dimension is examined.
/// isotropic: only subspaces on which the linking form vanishes.
enum class ObstructionMode { Literal, Isotropic };

std::string_view to_string(CertificateKind k);
std::string_view to_string(ObstructionMode m);
ObstructionMode parse_mode(std::string_view s);

/// Per-summand data a replay needs: the sigma table (r = 0..p-1) and the
/// self-linking of the order-p generator.
struct SummandData {
  std::int64_t a = 0;
  std::int64_t signed_b = 0;
  std::vector<Rat> sigma;
  Rat linking;

  friend bool operator==(const SummandData&, const SummandData&) = default;
};

using Rows = std::vector<std::vector<int>>;

struct SubspaceWitness {
  Rows basis;
  std::vector<int> chi;
  RatInterval interval;

  friend bool operator==(const SubspaceWitness&, const SubspaceWitness&) = default;
};

/// Outcome of the subspace obstruction check at one genus.
struct ExhaustiveLevel {
  int g = 0;
  std::size_t dim = 0;
  bool obstructed = false;
  /// subspaces of dimension `dim` examined (isotropic ones only, in that mode)
  std::size_t examined = 0;
  /// one bad character per examined subspace, in enumeration order
  std::vector<SubspaceWitness> bad;
  /// set when not obstructed: a subspace with no certified violation
  std::optional<Rows> unobstructed_subspace;

  friend bool operator==(const ExhaustiveLevel&, const ExhaustiveLevel&) = default;
};

struct ExhaustiveWitness {
  std::vector<ExhaustiveLevel> levels;
  friend bool operator==(const ExhaustiveWitness&, const ExhaustiveWitness&) = default;
};

/// One candidate maximal index a. Either the inequality
/// lower - upper_sum > 4g holds, or (a = 1 only) the first coordinate line
/// is not isotropic because its self-linking is nonzero.
struct AnalyticStep {
  int a = 0;
  Rat lower;
  Rat upper_sum;
  std::optional<Rat> isotropy_linking;

  friend bool operator==(const AnalyticStep&, const AnalyticStep&) = default;
};

struct AnalyticWitness {
  int g = 0;
  std::size_t dim = 0;
  std::vector<Rat> lower;  // L_i: best certified one-sided magnitude of summand i
  std::vector<Rat> upper;  // U_i: max certified |sigma_1 tau| of summand i
  std::vector<AnalyticStep> steps;

  friend bool operator==(const AnalyticWitness&, const AnalyticWitness&) = default;
};

struct LinearStep {
  int g = 0;
  std::int64_t k = 0;
  Rat lhs;  // k B- - (n - k) B+, must exceed 4g

  friend bool operator==(const LinearStep&, const LinearStep&) = default;
};

struct LinearWitness {
  std::int64_t n = 0;
  int orientation = 1;
  int r_m = 0;
  Rat b_minus;
  Rat b_plus;
  Rat c;
  std::vector<LinearStep> steps;

  friend bool operator==(const LinearWitness&, const LinearWitness&) = default;
};

/// Replayable record certifying g4 >= g_lower for the connected sum of
/// `summands` (for linear-ex2: n copies of the single summand).
struct BoundCertificate {
  CertificateKind kind = CertificateKind::Exhaustive;
  int p = 0;
  std::vector<SummandData> summands;
  int g_lower = 0;
  std::optional<ObstructionMode> mode;
  bool signature_zero = false;
  bool half_rank = false;
  std::variant<ExhaustiveWitness, AnalyticWitness, LinearWitness> witnesses;
  std::string library_version;

  friend bool operator==(const BoundCertificate&, const BoundCertificate&) = default;
};

nlohmann::ordered_json to_json(const BoundCertificate& c);
/// Throws Error{ParseError} on schema violations.
BoundCertificate certificate_from_json(const nlohmann::ordered_json& j);
std::string serialize(const BoundCertificate& c);
BoundCertificate parse_certificate(std::string_view text);

struct ReplayResult {
  bool ok = false;
  std::string detail;
};

/// Re-verifies every recorded inequality from the certificate alone, using
/// exact arithmetic, F_p enumeration and interval operations only.
ReplayResult replay(const BoundCertificate& c);

}  // namespace clasp
