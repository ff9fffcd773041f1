#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "surgobs/cfk.hpp"
#include "surgobs/presentation.hpp"

namespace surgobs::obstruction {

using Json = nlohmann::ordered_json;
using cfk::HalfCorrectionTerms;

enum class VerdictKind {
  zero_surgery_obstructed,
  rohlin_obstructed,
  seifert_cobordism_obstructed,
  inconclusive,
  indeterminate,
};

std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::inconclusive;
  std::string reason;

  bool obstructed() const {
    return kind != VerdictKind::inconclusive && kind != VerdictKind::indeterminate;
  }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Obstructed iff d_{1/2} > 1/2 or d_{-1/2} < -1/2. Both correction terms are
// homology cobordism invariants, so the verdict covers the whole class.
Verdict zero_surgery_obstruction(const HalfCorrectionTerms& d);

// Obstructed iff both Rohlin invariants of the homology S^1 x S^2 are 1.
Verdict rohlin_obstruction(std::pair<int, int> mu);

// Seifert fibered homology S^1 x S^2's satisfy d_{1/2} <= 1/2 and
// d_{-1/2} >= -1/2; anything outside is not homology cobordant to one.
Verdict seifert_bound_check(const HalfCorrectionTerms& d);

// d_{1/2}(Y_0) - 1/2 <= d(Y) <= d_{-1/2}(Y_0) + 1/2 for Seifert-framed
// surgery Y_0 on a knot in the homology sphere Y.
bool sandwich_check(const Rational& d_y, const HalfCorrectionTerms& d);

struct WuDetail {
  std::vector<std::string> support;
  Integer square;
  std::optional<int> mu;  // absent when the class is not spherical
};

// Bounds on d_{+-1/2} from Seifert-framed surgery on a knot in a homology
// sphere with correction term ambient_d.
struct CorrectionBounds {
  Rational ambient_d;
  Rational d_half_max;
  Rational d_minus_half_min;
  bool sandwich_ok = false;
  bool can_obstruct = false;  // whether any values inside the bounds obstruct
};

struct ObstructionReport {
  std::string manifold_tag;
  long k = 0;
  bool h1_ok = false;
  std::optional<HalfCorrectionTerms> d_terms;
  std::optional<std::pair<int, int>> rohlin;
  std::vector<Verdict> verdicts;

  // M_k pipeline details.
  std::optional<Rational> ambient_d;
  std::optional<long> v0;
  std::optional<long> v0_dual;

  // N_k pipeline details.
  std::optional<std::string> seifert;
  std::optional<int> sigma;
  std::optional<bool> det_zero;
  std::optional<bool> semidefinite_both_orientations;
  std::vector<WuDetail> wu;
  std::optional<WeightVerdict> weight_one;
  std::optional<CorrectionBounds> d_bounds;

  // Facts taken as given rather than computed.
  std::vector<std::string> assumed;

  bool obstructed() const;
};

// Keeps obstructing verdicts; reduces to a single inconclusive verdict when
// none obstructs. An indeterminate verdict is always kept.
std::vector<Verdict> combine(std::vector<Verdict> vs);

// M_k: (1, 1) surgery on the Hopf link with T(2,3) and T(2,4k-1) summed in.
ObstructionReport family_Mk(long k);

// N_k: the Seifert fibered family with slopes (8k-3)/(16k-2), 1/(8k-1), 1/2.
ObstructionReport family_Nk(long k);

Json to_json(const ObstructionReport& r);
Json to_json(const HalfCorrectionTerms& d);
Json to_json(const Verdict& v);

}  // namespace surgobs::obstruction
