#include "clasp/knotmodel/seifert.hpp"

#include "clasp/error.hpp"

namespace clasp {

SeifertForm::SeifertForm(IntMatrix v) : v_(std::move(v)) {
  if (!v_.is_square() || v_.rows() % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "Seifert matrix must be square of even size");
  }
  if ((v_ - v_.transpose()).det() != 1) {
    throw Error(ErrorKind::InvalidArgument, "Seifert matrix must satisfy det(V - V^T) = 1");
  }
}

BigInt SeifertForm::determinant() const { return ::abs(symmetrized().det()); }

int classical_signature(const SeifertForm& s) { return symmetric_signature(s.symmetrized()); }

SeifertForm seifert_from_chain(const ChainPresentation& chain) {
  if (chain.c1() % 2 != 0 || chain.c2() % 2 != 0) {
    throw Error(ErrorKind::UnsupportedPresentation,
                "chain coefficients (" + std::to_string(chain.c1()) + ", " + std::to_string(chain.c2()) +
                    ") are not both even; no genus-one Seifert form is modelled");
  }
  IntMatrix v(2, 2);
  v(0, 0) = to_big(chain.c1() / 2);
  v(1, 0) = 1;
  v(1, 1) = -to_big(chain.c2() / 2);
  if (chain.mirrored()) v = -v.transpose();
  return SeifertForm(std::move(v));
}

bool clasp_record_check(const KnotRecord& rec) {
  for (const auto& v : {rec.c_plus, rec.c_minus, rec.c, rec.g4_upper})
    if (v && *v < 0) return false;
  if (rec.c && rec.g4_upper && *rec.g4_upper > *rec.c) return false;
  if (rec.c && rec.c_plus && rec.c_minus && *rec.c < *rec.c_plus + *rec.c_minus) return false;
  return true;
}

bool clasp_record_check(const KnotRecord& sum, std::span<const KnotRecord> parts) {
  if (!clasp_record_check(sum)) return false;
  for (const auto& part : parts)
    if (!clasp_record_check(part)) return false;

  auto subadditive = [&](std::optional<int> KnotRecord::*field) {
    if (!(sum.*field)) return true;
    int total = 0;
    for (const auto& part : parts) {
      if (!(part.*field)) return true;  // unknown part: nothing to compare
      total += *(part.*field);
    }
    return *(sum.*field) <= total;
  };
  return subadditive(&KnotRecord::c_plus) && subadditive(&KnotRecord::c_minus);
}

KnotFamilyMember bm_family(std::int64_t m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "B_m needs m >= 1");
  const std::int64_t a = to_i64(4 * to_big(m) * to_big(m) + 1);
  const std::string two_m = std::to_string(2 * m);
  TwoBridgeKnot knot = two_bridge(a, 2 * m, "B(" + two_m + "," + two_m + ")");

  IntMatrix v(2, 2);
  v(0, 0) = to_big(m);
  v(1, 0) = 1;
  v(1, 1) = -to_big(m);

  KnotRecord rec{knot, 0, 0, std::nullopt, std::nullopt, true, {}};
  rec.witnesses = {
      "unknotted by " + std::to_string(m) + " negative crossing changes",
      "unknotted by " + std::to_string(m) + " positive crossing changes",
      "negative amphicheiral (diagrammatic)",
  };
  if (m == 1) {
    // figure eight
    rec.c = 1;
    rec.g4_upper = 1;
  }
  return KnotFamilyMember{std::move(knot), SeifertForm(std::move(v)), std::move(rec)};
}

KnotFamilyMember twist_knot(std::int64_t t) {
  if (t < 1) throw Error(ErrorKind::InvalidArgument, "twist knot needs t >= 1");
  const std::int64_t a = to_i64(4 * to_big(t) + 1);
  TwoBridgeKnot knot = two_bridge(a, 2, "D+(U," + std::to_string(t) + ")");

  IntMatrix v(2, 2);
  v(0, 0) = -1;
  v(1, 0) = 1;
  v(1, 1) = to_big(t);

  KnotRecord rec{knot, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt, {}};
  if (t == 3) {
    rec.c_plus = 0;
    rec.c_minus = 0;
    rec.witnesses = {
        "changing the positive clasp crossing to negative yields the unknot",
        "changing a negative band crossing to positive yields D+(U,2), the ribbon Stevedore knot",
    };
  }
  return KnotFamilyMember{std::move(knot), SeifertForm(std::move(v)), std::move(rec)};
}

}  // namespace clasp
