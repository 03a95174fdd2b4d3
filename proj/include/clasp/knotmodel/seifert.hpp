#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clasp/exactmath/int_matrix.hpp"
#include "clasp/knotmodel/two_bridge.hpp"

namespace clasp {

/// Seifert pairing on a genus-g surface; v is 2g x 2g with det(v - v^T) = 1.
class SeifertForm {
 public:
  /// Throws Error{InvalidArgument} if v is not a valid Seifert matrix.
  explicit SeifertForm(IntMatrix v);

  const IntMatrix& matrix() const { return v_; }
  IntMatrix symmetrized() const { return v_ + v_.transpose(); }
  /// |det(v + v^T)|
  BigInt determinant() const;

 private:
  IntMatrix v_;
};

/// Signature of v + v^T. Error{DegenerateForm} if that matrix is singular.
int classical_signature(const SeifertForm& s);

/// Genus-one Seifert form whose symmetrisation is the chain matrix. Needs
/// both chain coefficients even (Error{UnsupportedPresentation} otherwise).
/// Mirrored chains yield -v^T.
SeifertForm seifert_from_chain(const ChainPresentation& chain);

/// Clasp-number and four-genus assertions carried alongside a knot. The
/// values are recorded claims (crossing-change witnesses are free text),
/// and only their mutual consistency is checked.
struct KnotRecord {
  TwoBridgeKnot knot;
  std::optional<int> c_plus;
  std::optional<int> c_minus;
  std::optional<int> c;
  std::optional<int> g4_upper;
  std::optional<bool> amphicheiral;
  std::vector<std::string> witnesses;
};

/// All recorded values non-negative, g4 <= c and c >= c+ + c-.
bool clasp_record_check(const KnotRecord& rec);
/// As above for the sum and each part, plus subadditivity
/// c+-(sum) <= sum of c+-(parts) wherever the part values are known.
bool clasp_record_check(const KnotRecord& sum, std::span<const KnotRecord> parts);

struct KnotFamilyMember {
  TwoBridgeKnot knot;
  SeifertForm seifert;
  KnotRecord record;
};

/// B_m = B(4m^2 + 1, 2m), Seifert form [[m, 0], [1, -m]], displayed as
/// "B(2m,2m)". Throws Error{InvalidArgument} for m < 1.
KnotFamilyMember bm_family(std::int64_t m);

/// Twisted double D+(U, t) with Seifert form [[-1, 0], [1, t]];
/// as a two-bridge knot it is B(4t + 1, 2).
KnotFamilyMember twist_knot(std::int64_t t);

}  // namespace clasp
