#include "surgobs/cfk.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "surgobs/gf2.hpp"

namespace surgobs::cfk {

namespace {

std::vector<Arrow> canonical_arrows(std::vector<Arrow> arrows) {
  std::sort(arrows.begin(), arrows.end());
  std::vector<Arrow> out;
  out.reserve(arrows.size());
  for (const Arrow& a : arrows) {
    if (!out.empty() && out.back() == a)
      out.pop_back();
    else
      out.push_back(a);
  }
  return out;
}

std::vector<std::vector<Arrow>> arrows_by_source(std::size_t n, const std::vector<Arrow>& arrows) {
  std::vector<std::vector<Arrow>> out(n);
  for (const Arrow& a : arrows) out[a.src].push_back(a);
  return out;
}

std::string dual_id(const std::string& id) {
  if (!id.empty() && id.back() == '*') return id.substr(0, id.size() - 1);
  return id + "*";
}

}  // namespace

std::vector<std::string> violations(const std::vector<Generator>& gens,
                                    const std::vector<Arrow>& arrows) {
  std::vector<std::string> out;
  std::set<std::string> ids;
  for (const Generator& g : gens)
    if (!ids.insert(g.id).second) out.push_back("duplicate generator id " + g.id);

  for (const Arrow& a : arrows) {
    if (a.src >= gens.size() || a.dst >= gens.size()) {
      out.push_back("arrow endpoint out of range");
      continue;
    }
    const Generator& s = gens[a.src];
    const Generator& d = gens[a.dst];
    const std::string name = s.id + " -> " + d.id + " (u=" + std::to_string(a.u) + ")";
    if (a.u < 0) out.push_back(name + ": negative U power");
    if (d.alexander - a.u > s.alexander) out.push_back(name + ": raises the j filtration");
    if (d.maslov - Rational(2 * a.u) != s.maslov - Rational(1))
      out.push_back(name + ": Maslov grading does not drop by one");
  }
  if (!out.empty()) return out;

  const auto by_src = arrows_by_source(gens.size(), arrows);
  for (std::size_t s = 0; s < gens.size(); ++s) {
    std::map<std::pair<std::size_t, long>, int> twice;
    for (const Arrow& a : by_src[s])
      for (const Arrow& b : by_src[a.dst]) twice[{b.dst, a.u + b.u}] ^= 1;
    for (const auto& [key, parity] : twice)
      if (parity)
        out.push_back("d^2 != 0: " + gens[s].id + " reaches U^" + std::to_string(key.second) +
                      " " + gens[key.first].id);
  }
  return out;
}

BifilteredComplex::BifilteredComplex(std::vector<Generator> gens, std::vector<Arrow> arrows)
    : gens_(std::move(gens)), arrows_(canonical_arrows(std::move(arrows))) {
  const auto problems = violations(gens_, arrows_);
  if (!problems.empty()) throw InvalidComplex("invalid complex: " + problems.front());
}

long BifilteredComplex::max_alexander() const {
  long m = gens_.empty() ? 0 : gens_.front().alexander;
  for (const auto& g : gens_) m = std::max(m, g.alexander);
  return m;
}

long BifilteredComplex::min_alexander() const {
  long m = gens_.empty() ? 0 : gens_.front().alexander;
  for (const auto& g : gens_) m = std::min(m, g.alexander);
  return m;
}

std::size_t BifilteredComplex::total_homology_rank() const {
  const std::size_t n = gens_.size();
  std::vector<Gf2Vector> columns(n, Gf2Vector(n));
  for (const Arrow& a : arrows_) columns[a.src].flip(a.dst);
  const std::size_t rank = gf2_rank(std::move(columns));
  return n - 2 * rank;
}

BifilteredComplex unknot() { return BifilteredComplex({{"x0", Rational(0), 0}}, {}); }

BifilteredComplex staircase(const std::vector<long>& steps) {
  if (steps.size() % 2 != 0) throw std::invalid_argument("staircase needs an even number of steps");
  for (long s : steps)
    if (s <= 0) throw std::invalid_argument("staircase steps must be positive");

  long top = 0;
  for (std::size_t i = 0; i < steps.size(); i += 2) top += steps[i];

  std::vector<Generator> gens{{"x0", Rational(0), top}};
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < steps.size(); i += 2) {
    const long h = steps[i];
    const long v = steps[i + 1];
    const std::size_t prev_idx = gens.size() - 1;
    // Horizontal arrow: same j, i drops by h. Vertical arrow: same i.
    Generator odd{"x" + std::to_string(prev_idx + 1), gens.back().maslov - Rational(2 * h - 1),
                  gens.back().alexander - h};
    Generator even{"x" + std::to_string(prev_idx + 2), odd.maslov - Rational(1),
                   odd.alexander - v};
    gens.push_back(std::move(odd));
    gens.push_back(std::move(even));
    arrows.push_back({prev_idx + 1, prev_idx, h});
    arrows.push_back({prev_idx + 1, prev_idx + 2, 0});
  }
  return BifilteredComplex(std::move(gens), std::move(arrows));
}

BifilteredComplex staircase_T2(long n, bool positive) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("T(2, n) needs odd n >= 1");
  const BifilteredComplex c = staircase(std::vector<long>(static_cast<std::size_t>(n - 1), 1));
  return positive ? c : dual(c);
}

BifilteredComplex dual(const BifilteredComplex& c) {
  std::vector<Generator> gens;
  gens.reserve(c.size());
  for (const Generator& g : c.generators()) gens.push_back({dual_id(g.id), -g.maslov, -g.alexander});
  std::vector<Arrow> arrows;
  arrows.reserve(c.arrows().size());
  for (const Arrow& a : c.arrows()) arrows.push_back({a.dst, a.src, a.u});
  return BifilteredComplex(std::move(gens), std::move(arrows));
}

BifilteredComplex tensor(const BifilteredComplex& a, const BifilteredComplex& b) {
  const std::size_t nb = b.size();
  std::vector<Generator> gens;
  gens.reserve(a.size() * nb);
  for (const Generator& x : a.generators())
    for (const Generator& y : b.generators())
      gens.push_back({"(" + x.id + "," + y.id + ")", x.maslov + y.maslov, x.alexander + y.alexander});

  std::vector<Arrow> arrows;
  for (const Arrow& e : a.arrows())
    for (std::size_t j = 0; j < nb; ++j) arrows.push_back({e.src * nb + j, e.dst * nb + j, e.u});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const Arrow& e : b.arrows()) arrows.push_back({i * nb + e.src, i * nb + e.dst, e.u});
  return BifilteredComplex(std::move(gens), std::move(arrows));
}

BifilteredComplex shift(const BifilteredComplex& c, const Rational& d) {
  std::vector<Generator> gens = c.generators();
  for (Generator& g : gens) g.maslov += d;
  return BifilteredComplex(std::move(gens), c.arrows());
}

BifilteredComplex reduce(const BifilteredComplex& input) {
  std::vector<Generator> gens = input.generators();
  std::vector<Arrow> arrows = input.arrows();

  for (;;) {
    // Arrows are sorted, so the first admissible one has the lowest index.
    std::optional<Arrow> pick;
    for (std::size_t k = 0; k < arrows.size() && !pick; ++k) {
      const Arrow& a = arrows[k];
      if (a.u != 0 || gens[a.src].alexander != gens[a.dst].alexander) continue;
      const auto parallel = std::count_if(arrows.begin(), arrows.end(), [&a](const Arrow& b) {
        return b.src == a.src && b.dst == a.dst;
      });
      if (parallel == 1) pick = a;
    }
    if (!pick) break;

    const std::size_t s = pick->src;
    const std::size_t t = pick->dst;
    std::vector<Arrow> next;
    std::vector<Arrow> into_t;
    std::vector<Arrow> from_s;
    for (const Arrow& a : arrows) {
      if (a.dst == t && a.src != s) into_t.push_back(a);
      if (a.src == s && a.dst != t) from_s.push_back(a);
      if (a.src != s && a.src != t && a.dst != s && a.dst != t) next.push_back(a);
    }
    for (const Arrow& x : into_t)
      for (const Arrow& y : from_s) next.push_back({x.src, y.dst, x.u + y.u});

    // Drop s and t and renumber.
    std::vector<std::size_t> remap(gens.size());
    std::vector<Generator> kept;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i == s || i == t) continue;
      remap[i] = kept.size();
      kept.push_back(std::move(gens[i]));
    }
    for (Arrow& a : next) {
      a.src = remap[a.src];
      a.dst = remap[a.dst];
    }
    gens = std::move(kept);
    arrows = canonical_arrows(std::move(next));
  }
  return BifilteredComplex(std::move(gens), std::move(arrows));
}

namespace {

// Finite sub-quotient X = region ∩ {i <= top} of the U-translates of C,
// sliced by Maslov grading. U^{-m} x sits at i = m with grading M(x) + 2m.
class Truncation {
 public:
  Truncation(const BifilteredComplex& c, Region region, long top)
      : c_(c), region_(region), top_(top), by_src_(arrows_by_source(c.size(), c.arrows())) {}

  long lowest_copy(std::size_t g) const {
    return region_ == Region::ambient ? 0 : -std::max(0L, c_.generators()[g].alexander);
  }

  // Translate index m of generator g in grading d, if it lies in X.
  std::optional<long> copy_at(std::size_t g, const Rational& d) const {
    const Rational twice_m = d - c_.generators()[g].maslov;
    if (!twice_m.is_integer()) return std::nullopt;
    const Integer tm = twice_m.numerator();
    if (tm % 2 != 0) return std::nullopt;
    const long m = Integer(tm / 2).get_si();
    if (m < lowest_copy(g) || m > top_) return std::nullopt;
    return m;
  }

  struct Slice {
    std::vector<std::pair<std::size_t, long>> copies;  // (generator, m)
    std::vector<long> position;                          // per generator, -1 if absent
  };

  Slice slice(const Rational& d) const {
    Slice s;
    s.position.assign(c_.size(), -1);
    for (std::size_t g = 0; g < c_.size(); ++g)
      if (const auto m = copy_at(g, d)) {
        s.position[g] = static_cast<long>(s.copies.size());
        s.copies.emplace_back(g, *m);
      }
    return s;
  }

  // Boundary of copy (g, m), expressed in the slice one grading lower.
  Gf2Vector boundary(std::size_t g, long m, const Slice& lower) const {
    Gf2Vector v(lower.copies.size());
    for (const Arrow& a : by_src_[g]) {
      const long mm = m - a.u;
      if (mm < lowest_copy(a.dst)) continue;  // falls into the quotiented part
      const long pos = lower.position[a.dst];
      if (pos < 0 || lower.copies[static_cast<std::size_t>(pos)].second != mm)
        throw std::logic_error("boundary left its grading slice");
      v.flip(static_cast<std::size_t>(pos));
    }
    return v;
  }

  std::vector<Gf2Vector> cycles(const Rational& d) const {
    const Slice here = slice(d);
    const Slice lower = slice(d - Rational(1));
    Gf2Matrix dmat(lower.copies.size(), here.copies.size());
    for (std::size_t k = 0; k < here.copies.size(); ++k) {
      const Gf2Vector col = boundary(here.copies[k].first, here.copies[k].second, lower);
      for (std::size_t r = col.find_first(); r != Gf2Vector::npos; r = col.find_next(r))
        dmat.rows[r][k] = true;
    }
    return gf2_affine_solve(dmat, Gf2Vector(lower.copies.size()))->kernel;
  }

 private:
  const BifilteredComplex& c_;
  Region region_;
  long top_;
  std::vector<std::vector<Arrow>> by_src_;
};

}  // namespace

Rational tower_bottom(const BifilteredComplex& c, Region region, long depth) {
  if (c.size() == 0) throw NotKnotLike("empty complex");
  if (depth < 1) throw std::invalid_argument("tower depth must be positive");

  const long width = c.max_alexander() - c.min_alexander();
  Rational max_m = c.generators().front().maslov;
  Rational min_m = max_m;
  for (const auto& g : c.generators()) {
    max_m = std::max(max_m, g.maslov);
    min_m = std::min(min_m, g.maslov);
  }
  const long spread = Integer((max_m - min_m).ceil()).get_si();
  const long top = spread / 2 + 2 * width + depth + 4;
  const Truncation x(c, region, top);

  // Gradings below `ceiling` agree with the untruncated region.
  const Rational ceiling = min_m + Rational(2 * top);

  std::set<Rational> gradings;
  for (std::size_t g = 0; g < c.size(); ++g)
    for (long m = x.lowest_copy(g); m <= top; ++m)
      gradings.insert(c.generators()[g].maslov + Rational(2 * m));

  for (const Rational& d : gradings) {
    const Rational source = d + Rational(2 * depth);
    if (source + Rational(1) >= ceiling) break;

    const auto here = x.slice(d);
    if (here.copies.empty()) continue;
    Gf2Span boundaries(here.copies.size());
    const auto upper = x.slice(d + Rational(1));
    for (const auto& [g, m] : upper.copies) boundaries.insert(x.boundary(g, m, here));

    const auto src = x.slice(source);
    for (const Gf2Vector& z : x.cycles(source)) {
      Gf2Vector image(here.copies.size());
      for (std::size_t k = z.find_first(); k != Gf2Vector::npos; k = z.find_next(k)) {
        const auto [g, m] = src.copies[k];
        const long mm = m - depth;
        if (mm < x.lowest_copy(g)) continue;
        image.flip(static_cast<std::size_t>(here.position[g]));
      }
      if (!boundaries.contains(image)) return d;
    }
  }
  throw NotKnotLike("no U-tower found below the truncation ceiling");
}

long v0(const BifilteredComplex& c) {
  if (!c.is_knot_like())
    throw NotKnotLike("total homology has rank " + std::to_string(c.total_homology_rank()) +
                      ", expected 1");
  const long depth = c.max_alexander() - c.min_alexander() + 2;
  auto at = [&c](long t) {
    return tower_bottom(c, Region::ambient, t) - tower_bottom(c, Region::large_surgery, t);
  };
  const Rational gap = at(depth);
  if (gap != at(depth + 1)) throw std::logic_error("V0 depends on the truncation depth");
  const Rational v = gap / Rational(2);
  if (!v.is_integer() || v.sign() < 0) throw std::logic_error("V0 is not a nonnegative integer");
  return v.numerator().get_si();
}

HalfCorrectionTerms d_zero_surgery(const BifilteredComplex& c, const Rational& ambient_d) {
  const Rational half(1, 2);
  return {half - Rational(2 * v0(c)) + ambient_d,
          -half + Rational(2 * v0(dual(c))) + ambient_d};
}

Rational d_pm1_surgery(const BifilteredComplex& c, int sign) {
  if (sign == 1) return Rational(-2 * v0(c));
  if (sign == -1) return Rational(2 * v0(dual(c)));
  throw std::invalid_argument("surgery sign must be +1 or -1");
}

namespace {

Rational lens_term(long p, long q, long i) {
  if (p == 1) return Rational(0);
  const long a = 2 * i + 1 - p - q;
  const Rational head(Integer(a) * a - Integer(p) * q, Integer(4) * p * q);
  return head - lens_term(q, p % q, i % q);
}

}  // namespace

std::vector<Rational> lens_d(long p, long q) {
  if (p < 1 || q < 0 || q >= p || std::gcd(p, q) != 1)
    throw std::invalid_argument("lens space L(p, q) needs p >= 1, 0 <= q < p, gcd(p, q) = 1");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(p));
  for (long i = 0; i < p; ++i) out.push_back(lens_term(p, q, i));
  return out;
}

BifilteredComplex read_complex(std::istream& in) {
  struct RawArrow {
    std::string src, dst;
    long u;
    int line;
  };
  std::vector<Generator> gens;
  std::map<std::string, std::size_t> index;
  std::vector<RawArrow> raw;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword) || keyword.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      throw InvalidComplex("line " + std::to_string(lineno) + ": " + why);
    };
    std::string a, b, c, extra;
    if (!(ls >> a >> b >> c)) fail("expected three fields after '" + keyword + "'");
    if (ls >> extra) fail("trailing text '" + extra + "'");
    try {
      if (keyword == "gen") {
        const Integer alex = parse_integer(c);
        if (!alex.fits_slong_p()) fail("Alexander grading out of range");
        if (!index.emplace(a, gens.size()).second) fail("duplicate generator '" + a + "'");
        gens.push_back({a, Rational::parse(b), alex.get_si()});
      } else if (keyword == "arrow") {
        const Integer u = parse_integer(c);
        if (!u.fits_slong_p()) fail("U power out of range");
        raw.push_back({a, b, u.get_si(), lineno});
      } else {
        fail("unknown keyword '" + keyword + "'");
      }
    } catch (const std::invalid_argument& e) {
      if (dynamic_cast<const InvalidComplex*>(&e)) throw;
      fail(e.what());
    }
  }
  std::vector<Arrow> arrows;
  for (const RawArrow& r : raw) {
    const auto s = index.find(r.src);
    const auto d = index.find(r.dst);
    if (s == index.end() || d == index.end())
      throw InvalidComplex("line " + std::to_string(r.line) + ": arrow names an unknown generator");
    arrows.push_back({s->second, d->second, r.u});
  }
  if (gens.empty()) throw InvalidComplex("complex has no generators");
  return BifilteredComplex(std::move(gens), std::move(arrows));
}

void write_complex(std::ostream& out, const BifilteredComplex& c) {
  for (const Generator& g : c.generators())
    out << "gen " << g.id << ' ' << g.maslov.fraction() << ' ' << g.alexander << '\n';
  for (const Arrow& a : c.arrows())
    out << "arrow " << c.generators()[a.src].id << ' ' << c.generators()[a.dst].id << ' ' << a.u
        << '\n';
}

}  // namespace surgobs::cfk
