#include "surgobs/plumbing.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "surgobs/gf2.hpp"

namespace surgobs::plumbing {

std::size_t PlumbingGraph::add_vertex(std::string id, std::int64_t weight) {
  if (id.empty()) throw std::invalid_argument("empty vertex id");
  if (index_.count(id)) throw std::invalid_argument("duplicate vertex id '" + id + "'");
  const std::size_t idx = vertices_.size();
  index_.emplace(id, idx);
  vertices_.push_back({std::move(id), weight});
  return idx;
}

std::size_t PlumbingGraph::index_of(const std::string& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) throw std::invalid_argument("unknown vertex id '" + id + "'");
  return it->second;
}

void PlumbingGraph::add_edge(const std::string& a, const std::string& b) {
  add_edge(index_of(a), index_of(b));
}

void PlumbingGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= size() || b >= size()) throw std::invalid_argument("edge endpoint out of range");
  if (a == b) throw std::invalid_argument("self-loop at '" + vertices_[a].id + "'");
  if (adjacent(a, b))
    throw std::invalid_argument("repeated edge " + vertices_[a].id + " -- " + vertices_[b].id);
  edges_.emplace_back(std::min(a, b), std::max(a, b));
}

bool PlumbingGraph::adjacent(std::size_t a, std::size_t b) const {
  const auto key = std::make_pair(std::min(a, b), std::max(a, b));
  return std::find(edges_.begin(), edges_.end(), key) != edges_.end();
}

bool PlumbingGraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<std::size_t> parent(size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = size();
  for (const auto& [a, b] : edges_) {
    const std::size_t ra = find(a);
    const std::size_t rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

SymIntMatrix PlumbingGraph::form() const {
  IntMatrix q(size(), size());
  for (std::size_t i = 0; i < size(); ++i) q(i, i) = static_cast<long>(vertices_[i].weight);
  for (const auto& [a, b] : edges_) {
    q(a, b) = 1;
    q(b, a) = 1;
  }
  return SymIntMatrix(std::move(q));
}

PlumbingGraph read_plumbing(std::istream& in) {
  PlumbingGraph g;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword) || keyword.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("line " + std::to_string(lineno) + ": " + why);
    };
    std::string a, b, extra;
    if (!(ls >> a >> b)) fail("expected two fields after '" + keyword + "'");
    if (ls >> extra) fail("trailing text '" + extra + "'");
    try {
      if (keyword == "vertex") {
        const Integer w = parse_integer(b);
        if (!w.fits_slong_p()) fail("weight out of range");
        g.add_vertex(a, w.get_si());
      } else if (keyword == "edge") {
        g.add_edge(a, b);
      } else {
        fail("unknown keyword '" + keyword + "'");
      }
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  if (g.size() == 0) throw ParseError("plumbing graph has no vertices");
  return g;
}

void write_plumbing(std::ostream& out, const PlumbingGraph& g) {
  for (const auto& v : g.vertices()) out << "vertex " << v.id << ' ' << v.weight << '\n';
  for (const auto& [a, b] : g.edges())
    out << "edge " << g.vertex(a).id << ' ' << g.vertex(b).id << '\n';
}

FormReport intersection_form(const PlumbingGraph& g) {
  FormReport r{g.form(), 0, 0, 0, 0, Integer(0), {}};
  const Inertia in = congruence_diagonalize(r.q);
  r.b_plus = in.b_plus;
  r.b_zero = in.b_zero;
  r.b_minus = in.b_minus;
  r.sigma = in.signature();
  r.det = determinant(r.q.matrix());
  r.h1 = cokernel_invariants(r.q.matrix());
  return r;
}

std::vector<std::string> support_ids(const PlumbingGraph& g, const WuClass& nu) {
  std::vector<std::string> ids;
  ids.reserve(nu.support.size());
  for (std::size_t i : nu.support) ids.push_back(g.vertex(i).id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<WuClass> wu_classes(const PlumbingGraph& g) {
  const std::size_t n = g.size();
  const SymIntMatrix q = g.form();
  Gf2Matrix a(n, n);
  Gf2Vector diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.rows[i][j] = mpz_odd_p(q(i, j).get_mpz_t()) != 0;
    diag[i] = a.rows[i][i];
  }
  // The diagonal of a symmetric GF(2) matrix always lies in its column
  // space, so an inconsistent system means the input was corrupted.
  const auto space = gf2_affine_solve(a, diag);
  if (!space) throw StructuralError("Wu equation has no solution");

  std::vector<WuClass> out;
  for (const Gf2Vector& v : space->elements()) {
    WuClass w;
    for (std::size_t i = v.find_first(); i != Gf2Vector::npos; i = v.find_next(i))
      w.support.push_back(i);
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), [&g](const WuClass& x, const WuClass& y) {
    return support_ids(g, x) < support_ids(g, y);
  });
  return out;
}

Integer wu_square(const PlumbingGraph& g, const WuClass& nu) {
  Integer s = 0;
  for (std::size_t i : nu.support) s += static_cast<long>(g.vertex(i).weight);
  for (std::size_t a = 0; a < nu.support.size(); ++a)
    for (std::size_t b = a + 1; b < nu.support.size(); ++b)
      if (g.adjacent(nu.support[a], nu.support[b])) s += 2;
  return s;
}

int rohlin_from_plumbing(const PlumbingGraph& g, const WuClass& nu) {
  return rohlin_from_plumbing(g, intersection_form(g), nu);
}

int rohlin_from_plumbing(const PlumbingGraph& g, const FormReport& report, const WuClass& nu) {
  if (!g.is_tree()) throw NotATree("Rohlin invariants require a tree plumbing");
  for (std::size_t a = 0; a < nu.support.size(); ++a)
    for (std::size_t b = a + 1; b < nu.support.size(); ++b)
      if (g.adjacent(nu.support[a], nu.support[b]))
        throw NonSphericalWu("Wu support contains adjacent vertices " +
                             g.vertex(nu.support[a]).id + " and " + g.vertex(nu.support[b]).id);

  // Check the characteristic equation before trusting the class.
  const SymIntMatrix& q = report.q;
  for (std::size_t i = 0; i < g.size(); ++i) {
    Integer row = 0;
    for (std::size_t j : nu.support) row += q(i, j);
    if (mod_floor(row - q(i, i), 2) != 0) throw StructuralError("not a Wu class");
  }

  const Integer excess = Integer(report.sigma) - wu_square(g, nu);
  if (mod_floor(excess, 8) != 0)
    throw IntegralityViolation("sigma - nu.nu = " + excess.get_str() + " is not divisible by 8");
  return static_cast<int>(mod_floor(Integer(excess / 8), 2).get_si());
}

std::pair<int, int> rohlin_surgery(int mu_y, int arf_k) {
  if ((mu_y != 0 && mu_y != 1) || (arf_k != 0 && arf_k != 1))
    throw std::invalid_argument("Rohlin and Arf invariants take values in {0, 1}");
  return {mu_y, mu_y ^ arf_k};
}

int arf_from_determinant(const Integer& det) {
  const Integer r = mod_floor(det, 8);
  if (r % 2 == 0) throw std::invalid_argument("knot determinant must be odd, got " + det.get_str());
  return (r == 1 || r == 7) ? 0 : 1;
}

Integer torus_knot_determinant(int p, int n) {
  if (std::gcd(p, n) != 1) throw std::invalid_argument("torus knot parameters must be coprime");
  if (p % 2 == 0) return std::abs(n);
  if (n % 2 == 0) return std::abs(p);
  return 1;
}

}  // namespace surgobs::plumbing
