#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "surgobs/rational.hpp"

namespace surgobs {

// A letter is a signed generator number: +k is generator k-1, -k its inverse.
using Letter = int;
using Word = std::vector<Letter>;

inline Letter gen_letter(std::size_t index) { return static_cast<Letter>(index) + 1; }

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
Word power(const Word& w, long n);
Word concat(std::initializer_list<Word> parts);
// Commutator [a, b] = a b a^-1 b^-1.
Word commutator(const Word& a, const Word& b);
long exponent_sum(const Word& w, std::size_t gen);
std::size_t occurrences(const Word& w, std::size_t gen);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::optional<std::size_t> find_generator(std::string_view name) const;
  // Throws std::invalid_argument if some letter names no listed generator.
  void validate() const;
};

// Parses "x2^3 x1^-1" style words (factors separated by spaces or '*', an
// empty string is the identity). Throws std::invalid_argument.
Word parse_word(std::string_view text, const GroupPresentation& p);

std::string format_word(const Word& w, const GroupPresentation& p);
std::ostream& operator<<(std::ostream& os, const GroupPresentation& p);

// Removes generator g using a relator equivalent to g w^-1 (g occurs once in
// it and solving for g gives w after free reduction). Every other relator has
// g^{+-1} replaced by w^{+-1}, is freely reduced, and is dropped if it becomes
// empty. Throws std::invalid_argument if no such relator exists or w
// mentions g.
GroupPresentation tietze_eliminate(const GroupPresentation& p, std::size_t g, const Word& w);

enum class WeightVerdict { weight_one_confirmed, inconclusive };

struct WeightOneResult {
  WeightVerdict verdict = WeightVerdict::inconclusive;
  GroupPresentation reduced;           // after all eliminations
  std::optional<Integer> exponent_gcd;  // set when at most one generator remains
};

// Adds the killer as a relator and repeatedly eliminates any generator that
// occurs exactly once in some relator. If at most one generator survives the
// quotient is cyclic, and it is trivial iff the gcd of relator exponent sums
// is 1. Never claims weight greater than one.
WeightOneResult weight_one_witness(const GroupPresentation& p, const Word& killer);

std::string to_string(WeightVerdict v);

}  // namespace surgobs
