#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace surgobs {

using Gf2Vector = boost::dynamic_bitset<>;

struct Gf2Matrix {
  std::size_t cols = 0;
  std::vector<Gf2Vector> rows;  // each of size `cols`

  Gf2Matrix() = default;
  Gf2Matrix(std::size_t nrows, std::size_t ncols)
      : cols(ncols), rows(nrows, Gf2Vector(ncols)) {}

  std::size_t row_count() const { return rows.size(); }
  Gf2Vector apply(const Gf2Vector& x) const;
};

// Solution set of A x = b: particular + span(kernel).
struct Gf2AffineSpace {
  Gf2Vector particular;
  std::vector<Gf2Vector> kernel;

  // Every element, ordered by the binary counter over the kernel basis.
  std::vector<Gf2Vector> elements() const;
};

// Returns nullopt when the system is inconsistent. Free variables are set to
// zero in the particular solution; the kernel basis has one vector per free
// column, in increasing column order.
std::optional<Gf2AffineSpace> gf2_affine_solve(const Gf2Matrix& a, const Gf2Vector& b);

// Rank of the span of the given vectors (all of equal size).
std::size_t gf2_rank(std::vector<Gf2Vector> vectors);

// Incremental row-echelon basis, for repeated span-membership queries.
class Gf2Span {
 public:
  explicit Gf2Span(std::size_t dim) : dim_(dim) {}

  // Reduces v against the basis; returns true and stores it if independent.
  bool insert(Gf2Vector v);
  bool contains(Gf2Vector v) const;
  std::size_t rank() const { return basis_.size(); }

 private:
  void reduce(Gf2Vector& v) const;

  std::size_t dim_;
  std::vector<Gf2Vector> basis_;   // pivot of basis_[k] is pivots_[k]
  std::vector<std::size_t> pivots_;
};

}  // namespace surgobs
