#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "surgobs/plumbing.hpp"
#include "surgobs/presentation.hpp"
#include "surgobs/rational.hpp"

namespace surgobs::seifert {

// Unnormalized Seifert invariants (e; r_1, ..., r_n) over S^2; slopes nonzero.
struct SeifertData {
  Integer e;
  std::vector<Rational> slopes;

  SeifertData() = default;
  SeifertData(Integer e_, std::vector<Rational> slopes_);

  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

// Every slope lies strictly between 0 and 1.
struct NormalizedSeifertData {
  Integer e;
  std::vector<Rational> slopes;

  friend bool operator==(const NormalizedSeifertData&, const NormalizedSeifertData&) = default;
};

// One slam-dunk step applied by normalize().
struct NormalizationStep {
  Rational slope_before;
  Integer absorbed;        // integer part moved into e
  bool removed = false;    // the slope was an integer and left the tuple
};

NormalizedSeifertData normalize(const SeifertData& d, std::vector<NormalizationStep>* trace = nullptr);

// [a_1, ..., a_m] with every a_j <= -2 and a_1 - 1/(a_2 - 1/(...)) = -1/r.
std::vector<Integer> neg_cont_frac(const Rational& r);

// a_1 - 1/(a_2 - 1/(... a_m)); throws std::domain_error on a zero denominator.
Rational eval_ncf(const std::vector<Integer>& a);

// e + sum r_i; zero exactly when the boundary has the homology of S^1 x S^2.
Rational euler_number(const NormalizedSeifertData& d);
Rational euler_number(const SeifertData& d);

// Star-shaped plumbing: center "c" of weight e and, for each slope r_i, a leg
// "l<i>.1" - "l<i>.2" - ... carrying the continued fraction of -1/r_i.
plumbing::PlumbingGraph build_plumbing(const NormalizedSeifertData& d);

SeifertData reverse_orientation(const SeifertData& d);

// Seifert invariants of the N_k family: slopes (8k-3)/(16k-2), 1/(8k-1), 1/2
// and the central weight that makes the Euler number vanish.
SeifertData nk_family(long k);

// Generators x_1..x_n, h; relators x_i^{q_i} h^{-p_i}, x_1...x_n h^e and
// [h, x_i]. Requires at least one slope.
GroupPresentation seifert_presentation(const NormalizedSeifertData& d);

// Reads `e <int>` and `slope <p>/<q>` lines (blank lines and '#' comments
// skipped). Exactly one `e` line is required. Throws plumbing::ParseError.
SeifertData read_seifert(std::istream& in);
void write_seifert(std::ostream& out, const SeifertData& d);

std::string format_seifert(const Integer& e, const std::vector<Rational>& slopes);

}  // namespace surgobs::seifert
