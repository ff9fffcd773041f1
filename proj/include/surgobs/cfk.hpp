#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "surgobs/rational.hpp"

namespace surgobs::cfk {

struct Generator {
  std::string id;
  Rational maslov;
  long alexander = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// d(src) contains U^u * dst.
struct Arrow {
  std::size_t src = 0;
  std::size_t dst = 0;
  long u = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct InvalidComplex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotKnotLike : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finitely generated model of CFK^infinity over F_2[U, U^-1]. A generator x
// sits at filtration (i, j) = (0, A(x)); U^u x sits at (-u, A(x) - u) with
// Maslov grading M(x) - 2u.
//
// Arrows are kept sorted and reduced mod 2 (a repeated arrow cancels).
// Construction validates d^2 = 0, the filtration and the Maslov rule.
class BifilteredComplex {
 public:
  BifilteredComplex() = default;
  BifilteredComplex(std::vector<Generator> gens, std::vector<Arrow> arrows);

  const std::vector<Generator>& generators() const { return gens_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t size() const { return gens_.size(); }

  long max_alexander() const;
  long min_alexander() const;

  // Rank over F of the homology with U = 1 (the filtration forgotten).
  std::size_t total_homology_rank() const;
  bool is_knot_like() const { return total_homology_rank() == 1; }

  friend bool operator==(const BifilteredComplex&, const BifilteredComplex&) = default;

 private:
  std::vector<Generator> gens_;
  std::vector<Arrow> arrows_;
};

// Human-readable list of invariant violations; empty when valid.
std::vector<std::string> violations(const std::vector<Generator>& gens,
                                    const std::vector<Arrow>& arrows);

BifilteredComplex unknot();

// Staircase with steps (h_1, v_1, h_2, v_2, ...): generator x_{2i+1} has a
// horizontal arrow of length h_{i+1} to x_{2i} and a vertical arrow of length
// v_{i+1} to x_{2i+2}; x_0 has Maslov grading 0.
BifilteredComplex staircase(const std::vector<long>& steps);

// CFK^infinity of T(2, n) (positive) or of its mirror T(2, -n), n odd >= 1.
BifilteredComplex staircase_T2(long n, bool positive);

// Dual complex: gradings negated and arrows reversed. A generator id gains
// or loses a trailing '*', so dual(dual(C)) == C.
BifilteredComplex dual(const BifilteredComplex& c);

BifilteredComplex tensor(const BifilteredComplex& a, const BifilteredComplex& b);

BifilteredComplex shift(const BifilteredComplex& c, const Rational& d);

// Cancels, lowest index first, arrows with u = 0 between generators of equal
// Alexander grading (the only arrow between that pair) until none remain.
BifilteredComplex reduce(const BifilteredComplex& c);

enum class Region {
  large_surgery,  // max(i, j) >= 0, computes d of large surgery in spin^c 0
  ambient,        // i >= 0, computes d of the ambient homology sphere
};

// Minimal Maslov grading of a nonzero homology class in the image of U^depth
// on the truncated sub-quotient of `region`.
Rational tower_bottom(const BifilteredComplex& c, Region region, long depth);

// V_0, from the tower bottoms of the two regions at depths T and T + 1 with
// T = (max A - min A) + 2; the two depths must agree. Throws NotKnotLike.
long v0(const BifilteredComplex& c);

struct HalfCorrectionTerms {
  Rational d_half;
  Rational d_minus_half;

  friend bool operator==(const HalfCorrectionTerms&, const HalfCorrectionTerms&) = default;
};

// d_{+-1/2} of 0-surgery on a knot in an L-space homology sphere with
// correction term ambient_d.
HalfCorrectionTerms d_zero_surgery(const BifilteredComplex& c, const Rational& ambient_d);

// d of +1 or -1 surgery on a knot in S^3.
Rational d_pm1_surgery(const BifilteredComplex& c, int sign);

// Correction terms d(L(p, q), i) for i = 0..p-1 by the standard recursion.
std::vector<Rational> lens_d(long p, long q);

// Serialization: `gen <id> <maslov p/q> <alex n>` and `arrow <src> <dst> <u>`.
BifilteredComplex read_complex(std::istream& in);
void write_complex(std::ostream& out, const BifilteredComplex& c);

}  // namespace surgobs::cfk
