#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "surgobs/forms.hpp"
#include "surgobs/matrix.hpp"

namespace surgobs::plumbing {

struct Vertex {
  std::string id;
  std::int64_t weight = 0;
};

// Simple weighted graph of plumbed 2-spheres. Vertex order is insertion order
// and fixes the basis of the intersection form.
class PlumbingGraph {
 public:
  // Throw std::invalid_argument on duplicate ids, unknown ids, self-loops and
  // repeated edges.
  std::size_t add_vertex(std::string id, std::int64_t weight);
  void add_edge(const std::string& a, const std::string& b);
  void add_edge(std::size_t a, std::size_t b);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  void set_weight(std::size_t i, std::int64_t w) { vertices_.at(i).weight = w; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::size_t index_of(const std::string& id) const;
  bool adjacent(std::size_t a, std::size_t b) const;

  bool is_connected() const;
  bool is_tree() const { return size() > 0 && edges_.size() + 1 == size() && is_connected(); }

  // Q[i][i] = weight, Q[i][j] = 1 for each edge.
  SymIntMatrix form() const;

  friend bool operator==(const PlumbingGraph& a, const PlumbingGraph& b) {
    return a.vertices_.size() == b.vertices_.size() && a.edges_ == b.edges_ &&
           std::equal(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(),
                      [](const Vertex& x, const Vertex& y) {
                        return x.id == y.id && x.weight == y.weight;
                      });
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;  // (min, max) index pairs
  std::map<std::string, std::size_t> index_;
};

// Reads `vertex <id> <weight>` / `edge <id> <id>` lines. Blank lines and
// lines starting with '#' are skipped. Throws ParseError.
PlumbingGraph read_plumbing(std::istream& in);
void write_plumbing(std::ostream& out, const PlumbingGraph& g);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FormReport {
  SymIntMatrix q;
  int b_plus = 0;
  int b_zero = 0;
  int b_minus = 0;
  int sigma = 0;
  Integer det;
  std::vector<Integer> h1;  // invariant factors of coker Q; 0 is a Z summand
};

FormReport intersection_form(const PlumbingGraph& g);

inline bool is_negative_semidefinite(const FormReport& r) { return r.b_plus == 0; }

// H1 of the boundary is Z exactly when coker Q is a single free summand.
inline bool boundary_is_homology_s1xs2(const FormReport& r) {
  return r.h1.size() == 1 && r.h1.front() == 0;
}

// GF(2) class given by its support, stored as sorted vertex indices.
struct WuClass {
  std::vector<std::size_t> support;

  friend bool operator==(const WuClass&, const WuClass&) = default;
};

struct StructuralError : std::logic_error {
  using std::logic_error::logic_error;
};

// All solutions of Q v = diag(Q) mod 2, ordered lexicographically by their
// sorted vertex ids.
std::vector<WuClass> wu_classes(const PlumbingGraph& g);

// Ids of the support, in sorted order.
std::vector<std::string> support_ids(const PlumbingGraph& g, const WuClass& nu);

// The support has adjacent vertices, so it is not represented by disjoint
// embedded spheres.
struct NonSphericalWu : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IntegralityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotATree : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Self-intersection of the 0/1 lift of nu.
Integer wu_square(const PlumbingGraph& g, const WuClass& nu);

// mu = (sigma - nu.nu) / 8 mod 2 for a tree plumbing and a spherical Wu class.
int rohlin_from_plumbing(const PlumbingGraph& g, const WuClass& nu);
int rohlin_from_plumbing(const PlumbingGraph& g, const FormReport& report, const WuClass& nu);

// Rohlin invariants of 0-surgery on K in a homology sphere Y: (mu(Y), mu(Y) + Arf(K)).
std::pair<int, int> rohlin_surgery(int mu_y, int arf_k);

// Arf invariant of a knot from its (odd) determinant: 0 iff det = +-1 mod 8.
int arf_from_determinant(const Integer& det);

// Determinant of the torus knot T(p, n) for coprime p, n.
Integer torus_knot_determinant(int p, int n);

}  // namespace surgobs::plumbing
