#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include "generators.hpp"
#include "surgobs/cfk.hpp"

using namespace surgobs;
using namespace gen;
using namespace surgobs::cfk;

namespace {

// Gradings and arrows, ignoring generator names.
bool same_shape(const BifilteredComplex& a, const BifilteredComplex& b) {
  if (a.size() != b.size() || a.arrows() != b.arrows()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.generators()[i].maslov != b.generators()[i].maslov ||
        a.generators()[i].alexander != b.generators()[i].alexander)
      return false;
  return true;
}

std::map<std::pair<Rational, long>, int> graded_ranks(const BifilteredComplex& c) {
  std::map<std::pair<Rational, long>, int> out;
  for (const Generator& g : c.generators()) ++out[{g.maslov, g.alexander}];
  return out;
}

}  // namespace

TEST_CASE("staircase_T2 examples") {
  const BifilteredComplex u = staircase_T2(1, true);
  REQUIRE(u.size() == 1);
  CHECK(u.generators()[0].maslov == Rational(0));
  CHECK(u.generators()[0].alexander == 0);
  CHECK(u.arrows().empty());

  const BifilteredComplex t = staircase_T2(3, true);
  REQUIRE(t.size() == 3);
  const std::vector<std::pair<long, long>> am{{1, 0}, {0, -1}, {-1, -2}};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(t.generators()[i].alexander == am[i].first);
    CHECK(t.generators()[i].maslov == Rational(am[i].second));
  }
  CHECK(t.arrows() == std::vector<Arrow>{{1, 0, 1}, {1, 2, 0}});

  CHECK(staircase_T2(9, true).size() == 9);
  CHECK(v0(staircase_T2(9, true)) == 2);
  CHECK_THROWS_AS(staircase_T2(4, true), std::invalid_argument);
  CHECK_THROWS_AS(staircase_T2(-3, true), std::invalid_argument);

  for (long n = 1; n <= 15; n += 2) {
    const BifilteredComplex c = staircase_T2(n, true);
    const long t2 = (n - 1) / 2;
    for (std::size_t j = 0; j < c.size(); ++j) {
      CHECK(c.generators()[j].alexander == t2 - static_cast<long>(j));
      CHECK(c.generators()[j].maslov == Rational(-static_cast<long>(j)));
    }
  }
}

TEST_CASE("validation rejects broken complexes") {
  const std::vector<Generator> two{{"a", Rational(0), 0}, {"b", Rational(-1), 0}};
  CHECK_NOTHROW(BifilteredComplex(two, {{0, 1, 0}}));
  CHECK_THROWS_AS(BifilteredComplex(two, {{1, 0, 0}}), InvalidComplex);  // Maslov rule
  CHECK_THROWS_AS(BifilteredComplex(two, {{0, 1, -1}}), InvalidComplex);
  const std::vector<Generator> filt{{"a", Rational(0), 0}, {"b", Rational(-1), 1}};
  CHECK_THROWS_AS(BifilteredComplex(filt, {{0, 1, 0}}), InvalidComplex);  // j increases
  const std::vector<Generator> chain{
      {"a", Rational(0), 0}, {"b", Rational(-1), 0}, {"c", Rational(-2), 0}};
  CHECK_THROWS_AS(BifilteredComplex(chain, {{0, 1, 0}, {1, 2, 0}}), InvalidComplex);  // d^2
  CHECK_THROWS_AS(BifilteredComplex(two, {{0, 5, 0}}), InvalidComplex);
  CHECK_FALSE(violations(chain, {{0, 1, 0}, {1, 2, 0}}).empty());
  // Repeated arrows cancel in pairs.
  CHECK(BifilteredComplex(two, {{0, 1, 0}, {0, 1, 0}}).arrows().empty());
}

TEST_CASE("knot-like check") {
  const std::vector<Generator> two{{"a", Rational(0), 0}, {"b", Rational(0), 0}};
  const BifilteredComplex c(two, {});
  CHECK(c.total_homology_rank() == 2);
  CHECK_FALSE(c.is_knot_like());
  CHECK_THROWS_AS(v0(c), NotKnotLike);
  CHECK_THROWS_AS(d_zero_surgery(c, Rational(0)), NotKnotLike);
  CHECK(tensor(staircase_T2(5, true), staircase_T2(3, false)).total_homology_rank() == 1);
}

TEST_CASE("dual examples") {
  CHECK(same_shape(dual(unknot()), unknot()));
  const BifilteredComplex d = dual(staircase_T2(3, true));
  const std::vector<std::pair<long, long>> am{{-1, 0}, {0, 1}, {1, 2}};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(d.generators()[i].alexander == am[i].first);
    CHECK(d.generators()[i].maslov == Rational(am[i].second));
  }
  CHECK(d.arrows() == std::vector<Arrow>{{0, 1, 1}, {2, 1, 0}});
  CHECK(d.generators()[0].id == "x0*");
  CHECK(dual(d) == staircase_T2(3, true));
  for (long k = 1; k <= 5; ++k) CHECK(v0(dual(staircase_T2(4 * k - 3, true))) == 0);
}

TEST_CASE("tensor examples") {
  const BifilteredComplex t7 = staircase_T2(7, true);
  CHECK(same_shape(tensor(unknot(), t7), t7));
  CHECK(same_shape(tensor(t7, unknot()), t7));

  const BifilteredComplex tt = tensor(staircase_T2(3, true), staircase_T2(3, false));
  CHECK(tt.size() == 9);
  CHECK(v0(tt) == 0);
  CHECK(oracle::v0(plain(tt)) == 0);
  CHECK(tt.generators()[0].id == "(x0,x0*)");

  const BifilteredComplex t = tensor(staircase_T2(7, true), staircase_T2(3, false));
  CHECK(v0(t) == 1);
  CHECK(oracle::v0(plain(t)) == 1);
}

TEST_CASE("shift examples") {
  const BifilteredComplex t = staircase_T2(3, true);
  CHECK(shift(t, Rational(0)) == t);
  const BifilteredComplex s = shift(t, Rational(-2));
  CHECK(s.generators()[0].maslov == Rational(-2));
  CHECK(s.generators()[1].maslov == Rational(-3));
  CHECK(s.generators()[2].maslov == Rational(-4));
  CHECK(shift(shift(t, Rational(7, 3)), Rational(-7, 3)) == t);
}

TEST_CASE("reduce examples") {
  for (long n = 1; n <= 11; n += 2) CHECK(reduce(staircase_T2(n, true)) == staircase_T2(n, true));
  const BifilteredComplex tt = tensor(staircase_T2(3, true), staircase_T2(3, false));
  const BifilteredComplex r = reduce(tt);
  CHECK(r.size() <= 9);
  CHECK(r.size() % 2 == 1);
  CHECK(r.total_homology_rank() == 1);
  CHECK(v0(r) == 0);
  CHECK(v0(dual(r)) == 0);
  for (const Arrow& a : r.arrows())
    CHECK_FALSE((a.u == 0 && r.generators()[a.src].alexander == r.generators()[a.dst].alexander));
}

TEST_CASE("reduce preserves v0 on random tensors") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> odd(0, 4);
  for (int t = 0; t < 200; ++t) {
    const BifilteredComplex c =
        tensor(staircase_T2(2 * odd(rng) + 1, rng() % 2 == 0), staircase_T2(2 * odd(rng) + 1, rng() % 2 == 0));
    const BifilteredComplex r = reduce(c);
    CHECK(r.size() <= c.size());
    CHECK(v0(r) == v0(c));
    CHECK(v0(dual(r)) == v0(dual(c)));
  }
}

TEST_CASE("v0 examples") {
  CHECK(v0(unknot()) == 0);
  CHECK(v0(staircase_T2(3, true)) == 1);
  for (long k = 1; k <= 25; ++k) {
    CHECK(v0(staircase_T2(4 * k - 3, true)) == k - 1);
    CHECK(v0(dual(staircase_T2(4 * k - 3, true))) == 0);
  }
}

TEST_CASE("v0 agrees with the subcomplex oracle") {
  for (long n = 1; n <= 21; n += 2) {
    const BifilteredComplex c = staircase_T2(n, true);
    CHECK(v0(c) == oracle::v0(plain(c)));
    CHECK(v0(c) == oracle::v0_lspace(plain(c)));
    CHECK(v0(dual(c)) == oracle::v0(oracle::mirror(plain(c))));
  }
  std::mt19937 rng(606);
  for (int t = 0; t < 60; ++t) {
    const BifilteredComplex s = random_staircase(rng);
    CHECK(v0(s) == oracle::v0_lspace(plain(s)));
    CHECK(v0(s) == oracle::v0(plain(s)));
    const BifilteredComplex c = random_knot_complex(rng, 2);
    CHECK(v0(c) == oracle::v0(plain(c)));
    CHECK(v0(dual(c)) == oracle::v0(oracle::mirror(plain(c))));
  }
}

TEST_CASE("tower_bottom depth agreement") {
  const BifilteredComplex c = tensor(staircase_T2(7, true), staircase_T2(3, false));
  const long width = c.max_alexander() - c.min_alexander();
  for (Region r : {Region::large_surgery, Region::ambient})
    CHECK(tower_bottom(c, r, width + 2) == tower_bottom(c, r, width + 5));
  CHECK(tower_bottom(c, Region::ambient, width + 2) == Rational(0));
  CHECK(tower_bottom(c, Region::large_surgery, width + 2) == Rational(-2));
}

TEST_CASE("d_zero_surgery and d_pm1_surgery examples") {
  CHECK(d_zero_surgery(unknot(), Rational(0)) == HalfCorrectionTerms{Rational(1, 2), Rational(-1, 2)});
  CHECK(d_zero_surgery(staircase_T2(3, true), Rational(0)) ==
        HalfCorrectionTerms{Rational(-3, 2), Rational(-1, 2)});
  CHECK(d_zero_surgery(tensor(staircase_T2(3, true), staircase_T2(3, false)), Rational(-2)) ==
        HalfCorrectionTerms{Rational(-3, 2), Rational(-5, 2)});

  CHECK(d_pm1_surgery(staircase_T2(3, true), 1) == Rational(-2));
  CHECK(d_pm1_surgery(unknot(), 1) == Rational(0));
  CHECK(d_pm1_surgery(unknot(), -1) == Rational(0));
  for (long k = 1; k <= 5; ++k) CHECK(d_pm1_surgery(staircase_T2(4 * k - 1, true), -1) == Rational(0));
  CHECK_THROWS_AS(d_pm1_surgery(unknot(), 2), std::invalid_argument);
}

TEST_CASE("lens space correction terms") {
  CHECK(lens_d(1, 0) == std::vector<Rational>{Rational(0)});
  CHECK(lens_d(2, 1) == std::vector<Rational>{Rational(1, 4), Rational(-1, 4)});
  const auto l = lens_d(49, 40);
  CHECK(l.size() == 49);
  CHECK(std::find(l.begin(), l.end(), Rational(-2)) != l.end());
  // L(p, 1) from the closed form ((2i - p)^2 - p) / 4p.
  for (long p = 1; p <= 12; ++p) {
    const auto d = lens_d(p, p == 1 ? 0 : 1);
    for (long i = 0; i < p; ++i) CHECK(d[i] == Rational((2 * i - p) * (2 * i - p) - p, 4 * p));
  }
  CHECK_THROWS_AS(lens_d(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(lens_d(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(lens_d(0, 0), std::invalid_argument);
}

TEST_CASE("combinators preserve validity") {
  std::mt19937 rng(500500);
  for (int t = 0; t < 500; ++t) {
    const BifilteredComplex c = random_knot_complex(rng, 3);
    std::vector<Generator> gens = c.generators();
    std::vector<Arrow> arrows = c.arrows();
    CHECK(violations(gens, arrows).empty());
    CHECK(c.is_knot_like());
    CHECK(dual(dual(c)) == c);
  }
}

TEST_CASE("v0 facts on staircases and their tensor products") {
  std::mt19937 rng(123);
  for (int t = 0; t < 80; ++t) {
    const BifilteredComplex c = random_knot_complex(rng, 2);
    const long a = v0(c), b = v0(dual(c));
    CHECK(a >= 0);
    CHECK(b >= 0);
    CHECK(std::min(a, b) == 0);
    CHECK(v0(shift(c, Rational(0))) == a);
    CHECK(v0(reduce(c)) == a);
  }
}

TEST_CASE("mirror symmetry of half correction terms") {
  std::mt19937 rng(100);
  for (int t = 0; t < 100; ++t) {
    const BifilteredComplex c = tensor(random_staircase(rng), dual(random_staircase(rng)));
    const HalfCorrectionTerms d = d_zero_surgery(c, Rational(0));
    const HalfCorrectionTerms m = d_zero_surgery(dual(c), Rational(0));
    CHECK(m.d_half == -d.d_minus_half);
    CHECK(m.d_minus_half == -d.d_half);
    // d_{1/2} = 1/2 and d_{-1/2} = -1/2 modulo 2
    CHECK((d.d_half - Rational(1, 2)).is_integer());
    CHECK((d.d_half - Rational(1, 2)).numerator() % 2 == 0);
    CHECK((d.d_minus_half + Rational(1, 2)).numerator() % 2 == 0);
  }
}

TEST_CASE("tensor is associative up to graded ranks") {
  std::mt19937 rng(77);
  for (int t = 0; t < 30; ++t) {
    const BifilteredComplex a = random_staircase(rng), b = staircase_T2(3, rng() % 2 == 0),
                            c = random_staircase(rng);
    const BifilteredComplex left = reduce(tensor(tensor(a, b), c));
    const BifilteredComplex right = reduce(tensor(a, tensor(b, c)));
    CHECK(graded_ranks(tensor(tensor(a, b), c)) == graded_ranks(tensor(a, tensor(b, c))));
    CHECK(left.size() == right.size());
    CHECK(v0(left) == v0(right));
  }
}

TEST_CASE("tensor with the mirror trefoil matches the smaller torus knot") {
  for (long k = 1; k <= 10; ++k) {
    const BifilteredComplex c = tensor(staircase_T2(4 * k - 1, true), staircase_T2(3, false));
    CHECK(v0(c) == v0(staircase_T2(4 * k - 3, true)));
    CHECK(v0(dual(c)) == v0(dual(staircase_T2(4 * k - 3, true))));
    if (k <= 4) CHECK(v0(c) == oracle::v0(plain(c)));
  }
}

TEST_CASE("complex file format") {
  const BifilteredComplex c = tensor(staircase_T2(3, true), shift(staircase_T2(3, false), Rational(1, 2)));
  std::ostringstream out;
  write_complex(out, c);
  std::istringstream back(out.str());
  CHECK(read_complex(back) == c);

  std::istringstream ok("# trefoil\ngen a 0/1 1\ngen b -1 0\ngen c -2 -1\narrow b a 1\narrow b c 0\n");
  CHECK(same_shape(read_complex(ok), staircase_T2(3, true)));

  for (const char* bad : {"gen a 0\n", "gen a x 0\n", "gen a 0 0\ngen a 0 0\n", "arrow a b 0\n",
                          "gen a 0 0\ngen b -1 0\narrow b a 0\n", "blah\n"}) {
    std::istringstream s(bad);
    CHECK_THROWS_AS(read_complex(s), InvalidComplex);
  }
}
