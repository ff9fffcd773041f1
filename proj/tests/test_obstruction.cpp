#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "surgobs/obstruction.hpp"

using namespace surgobs;
using namespace surgobs::obstruction;

namespace {

HalfCorrectionTerms d(Rational a, Rational b) { return {a, b}; }

bool has(const ObstructionReport& r, VerdictKind k) {
  return std::any_of(r.verdicts.begin(), r.verdicts.end(), [&](const Verdict& v) { return v.kind == k; });
}

}  // namespace

TEST_CASE("zero_surgery_obstruction examples") {
  const Verdict a = zero_surgery_obstruction(d(Rational(-3, 2), Rational(-5, 2)));
  CHECK(a.kind == VerdictKind::zero_surgery_obstructed);
  CHECK(a.reason == "d_-1/2 = -5/2 < -1/2");
  CHECK_FALSE(zero_surgery_obstruction(d(Rational(1, 2), Rational(-1, 2))).obstructed());
  const Verdict c = zero_surgery_obstruction(d(Rational(5, 2), Rational(-1, 2)));
  CHECK(c.obstructed());
  CHECK(c.reason == "d_1/2 = 5/2 > 1/2");
  CHECK(zero_surgery_obstruction(d(Rational(5, 2), Rational(-5, 2))).reason ==
        "d_1/2 = 5/2 > 1/2 and d_-1/2 = -5/2 < -1/2");
}

TEST_CASE("rohlin_obstruction examples") {
  CHECK(rohlin_obstruction({1, 1}).kind == VerdictKind::rohlin_obstructed);
  CHECK(rohlin_obstruction({0, 1}).kind == VerdictKind::inconclusive);
  CHECK(rohlin_obstruction({0, 0}).kind == VerdictKind::inconclusive);
}

TEST_CASE("seifert_bound_check examples") {
  CHECK(seifert_bound_check(d(Rational(-3, 2), Rational(-5, 2))).kind ==
        VerdictKind::seifert_cobordism_obstructed);
  CHECK(seifert_bound_check(d(Rational(1, 2), Rational(-1, 2))).kind == VerdictKind::inconclusive);
  CHECK(seifert_bound_check(d(Rational(-7, 2), Rational(-5, 2))).kind ==
        VerdictKind::seifert_cobordism_obstructed);
}

TEST_CASE("sandwich_check examples") {
  CHECK(sandwich_check(Rational(0), d(Rational(1, 2), Rational(-1, 2))));
  CHECK_FALSE(sandwich_check(Rational(0), d(Rational(-3, 2), Rational(-5, 2))));
  for (long k = 1; k <= 10; ++k) {
    const ObstructionReport r = family_Nk(k);
    REQUIRE(r.d_bounds);
    CHECK(r.d_bounds->ambient_d == Rational(0));
    CHECK(r.d_bounds->sandwich_ok);
    CHECK_FALSE(r.d_bounds->can_obstruct);
    CHECK(sandwich_check(Rational(0), d(r.d_bounds->d_half_max, r.d_bounds->d_minus_half_min)));
  }
}

TEST_CASE("combine") {
  const Verdict no{VerdictKind::inconclusive, "x"};
  const Verdict yes{VerdictKind::rohlin_obstructed, "y"};
  const Verdict unk{VerdictKind::indeterminate, "z"};
  CHECK(combine({no, no}).size() == 1);
  CHECK(combine({no, no}).front().kind == VerdictKind::inconclusive);
  CHECK(combine({no, yes}) == std::vector<Verdict>{yes});
  CHECK(combine({unk, no}) == std::vector<Verdict>{unk});
  CHECK(to_string(VerdictKind::seifert_cobordism_obstructed) == "seifert_cobordism_obstructed");
}

TEST_CASE("family_Mk") {
  const std::vector<Rational> expect{Rational(-3, 2), Rational(-7, 2), Rational(-11, 2)};
  for (long k = 1; k <= 10; ++k) {
    const ObstructionReport r = family_Mk(k);
    REQUIRE(r.d_terms);
    CHECK(r.d_terms->d_half == Rational(-2 * k) + Rational(1, 2));
    CHECK(r.d_terms->d_minus_half == Rational(-5, 2));
    if (k <= 3) CHECK(r.d_terms->d_half == expect[k - 1]);
    CHECK(r.h1_ok);
    CHECK(*r.ambient_d == Rational(-2));
    CHECK(*r.v0 == k - 1);
    CHECK(*r.v0_dual == 0);
    CHECK(has(r, VerdictKind::zero_surgery_obstructed));
    CHECK(has(r, VerdictKind::seifert_cobordism_obstructed));
    CHECK_FALSE(has(r, VerdictKind::inconclusive));
    CHECK(r.obstructed());
    CHECK_FALSE(r.rohlin);
    CHECK_FALSE(r.assumed.empty());
  }
  CHECK_THROWS_AS(family_Mk(0), std::invalid_argument);
}

TEST_CASE("family_Mk d terms separate different k") {
  std::set<Rational> seen;
  for (long k = 1; k <= 6; ++k) CHECK(seen.insert(family_Mk(k).d_terms->d_half).second);
}

TEST_CASE("family_Nk") {
  for (long k = 1; k <= 25; ++k) {
    const ObstructionReport r = family_Nk(k);
    CHECK(r.h1_ok);
    CHECK(*r.det_zero);
    CHECK(*r.semidefinite_both_orientations);
    REQUIRE(r.wu.size() == 2);
    for (const WuDetail& w : r.wu) {
      REQUIRE(w.mu);
      CHECK(*w.mu == k % 2);
    }
    REQUIRE(r.rohlin);
    CHECK(*r.rohlin == std::pair<int, int>(k % 2, k % 2));
    CHECK(r.obstructed() == (k % 2 == 1));
    CHECK(has(r, VerdictKind::rohlin_obstructed) == (k % 2 == 1));
    CHECK(*r.weight_one == WeightVerdict::weight_one_confirmed);
    CHECK_FALSE(r.d_terms);
    CHECK(*r.sigma == -2 * static_cast<int>(k) - 2);
  }
  CHECK(*family_Nk(1).seifert == "(-1; 5/14, 1/7, 1/2)");
  CHECK_THROWS_AS(family_Nk(0), std::invalid_argument);
}

TEST_CASE("report json") {
  const Json j = to_json(family_Mk(2));
  CHECK(j["manifold"] == "M_2");
  CHECK(j["d_terms"]["d_half"] == "-7/2");
  CHECK(j["d_terms"]["d_minus_half"] == "-5/2");
  CHECK(j["rohlin"].is_null());
  CHECK(j["verdicts"][0]["kind"] == "zero_surgery_obstructed");
  CHECK(Json::parse(j.dump()).dump() == j.dump());

  const Json n = to_json(family_Nk(1));
  CHECK(n["rohlin"] == Json::array({1, 1}));
  CHECK(n["wu_classes"][1]["support"] == Json::array({"l1.2", "l2.1"}));
  CHECK(n["wu_classes"][1]["square"] == "-12");
  CHECK(n["weight_one"] == "weight_one_confirmed");
  CHECK(n["d_bounds"]["d_half_max"] == "1/2");
  CHECK(n["d_bounds"]["d_minus_half_min"] == "-1/2");
  CHECK(Json::parse(n.dump()).dump() == n.dump());
}
