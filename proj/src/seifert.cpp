#include "surgobs/seifert.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace surgobs::seifert {

namespace {

std::int64_t to_weight(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("plumbing weight out of range");
  return v.get_si();
}

}  // namespace

SeifertData::SeifertData(Integer e_, std::vector<Rational> slopes_)
    : e(std::move(e_)), slopes(std::move(slopes_)) {
  for (const Rational& r : slopes)
    if (r.is_zero()) throw std::invalid_argument("Seifert slopes must be nonzero");
}

NormalizedSeifertData normalize(const SeifertData& d, std::vector<NormalizationStep>* trace) {
  NormalizedSeifertData out{d.e, {}};
  for (const Rational& r : d.slopes) {
    if (r.is_zero()) throw std::invalid_argument("Seifert slopes must be nonzero");
    const Integer f = r.floor();
    out.e += f;
    const bool removed = r.is_integer();
    if (!removed) out.slopes.push_back(r - Rational(f));
    if (trace) trace->push_back({r, f, removed});
  }
  return out;
}

std::vector<Integer> neg_cont_frac(const Rational& r) {
  if (r <= Rational(0) || r >= Rational(1))
    throw std::invalid_argument("negative continued fraction needs 0 < r < 1, got " + r.str());
  std::vector<Integer> out;
  Rational x = Rational(-1) / r;  // x < -1 throughout
  for (;;) {
    if (x.is_integer()) {
      out.push_back(x.numerator());
      return out;
    }
    const Integer a = x.floor();
    out.push_back(a);
    // x = a - 1/x'  =>  x' = 1/(a - x)
    x = Rational(1) / (Rational(a) - x);
  }
}

Rational eval_ncf(const std::vector<Integer>& a) {
  if (a.empty()) throw std::invalid_argument("empty continued fraction");
  Rational v(a.back());
  for (auto it = a.rbegin() + 1; it != a.rend(); ++it) {
    if (v.is_zero()) throw std::domain_error("continued fraction hits a zero denominator");
    v = Rational(*it) - Rational(1) / v;
  }
  return v;
}

Rational euler_number(const NormalizedSeifertData& d) {
  Rational s(d.e);
  for (const Rational& r : d.slopes) s += r;
  return s;
}

Rational euler_number(const SeifertData& d) {
  Rational s(d.e);
  for (const Rational& r : d.slopes) s += r;
  return s;
}

plumbing::PlumbingGraph build_plumbing(const NormalizedSeifertData& d) {
  plumbing::PlumbingGraph g;
  const std::size_t center = g.add_vertex("c", to_weight(d.e));
  for (std::size_t i = 0; i < d.slopes.size(); ++i) {
    const auto leg = neg_cont_frac(d.slopes[i]);
    std::size_t prev = center;
    for (std::size_t j = 0; j < leg.size(); ++j) {
      const std::string id = "l" + std::to_string(i + 1) + "." + std::to_string(j + 1);
      const std::size_t v = g.add_vertex(id, to_weight(leg[j]));
      g.add_edge(prev, v);
      prev = v;
    }
  }
  return g;
}

SeifertData reverse_orientation(const SeifertData& d) {
  SeifertData out;
  out.e = -d.e;
  out.slopes.reserve(d.slopes.size());
  for (const Rational& r : d.slopes) out.slopes.push_back(-r);
  return out;
}

SeifertData nk_family(long k) {
  if (k < 1) throw std::invalid_argument("N_k is defined for k >= 1");
  std::vector<Rational> slopes{Rational(8 * k - 3, 16 * k - 2), Rational(1, 8 * k - 1),
                               Rational(1, 2)};
  Rational sum(0);
  for (const Rational& r : slopes) sum += r;
  if (!sum.is_integer()) throw std::logic_error("N_k slopes do not sum to an integer");
  return SeifertData(-sum.numerator(), std::move(slopes));
}

GroupPresentation seifert_presentation(const NormalizedSeifertData& d) {
  const std::size_t n = d.slopes.size();
  if (n == 0) throw std::invalid_argument("presentation requires at least one exceptional fiber");
  if (!d.e.fits_slong_p()) throw std::overflow_error("central weight out of range");

  GroupPresentation p;
  for (std::size_t i = 0; i < n; ++i) p.generators.push_back("x" + std::to_string(i + 1));
  p.generators.push_back("h");
  const Word h{gen_letter(n)};

  for (std::size_t i = 0; i < n; ++i) {
    const Integer& num = d.slopes[i].numerator();
    const Integer& den = d.slopes[i].denominator();
    if (!num.fits_slong_p() || !den.fits_slong_p()) throw std::overflow_error("slope out of range");
    p.relators.push_back(
        free_reduce(concat({power(Word{gen_letter(i)}, den.get_si()), power(h, -num.get_si())})));
  }
  Word product;
  for (std::size_t i = 0; i < n; ++i) product.push_back(gen_letter(i));
  p.relators.push_back(free_reduce(concat({product, power(h, d.e.get_si())})));
  for (std::size_t i = 0; i < n; ++i) p.relators.push_back(commutator(h, Word{gen_letter(i)}));
  return p;
}

SeifertData read_seifert(std::istream& in) {
  std::optional<Integer> e;
  std::vector<Rational> slopes;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword) || keyword.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      throw plumbing::ParseError("line " + std::to_string(lineno) + ": " + why);
    };
    std::string value, extra;
    if (!(ls >> value)) fail("missing value after '" + keyword + "'");
    if (ls >> extra) fail("trailing text '" + extra + "'");
    try {
      if (keyword == "e") {
        if (e) fail("duplicate 'e' line");
        e = parse_integer(value);
      } else if (keyword == "slope") {
        const Rational r = Rational::parse(value);
        if (r.is_zero()) fail("slope must be nonzero");
        slopes.push_back(r);
      } else {
        fail("unknown keyword '" + keyword + "'");
      }
    } catch (const std::invalid_argument& ex) {
      fail(ex.what());
    }
  }
  if (!e) throw plumbing::ParseError("missing 'e' line");
  return SeifertData(*e, std::move(slopes));
}

void write_seifert(std::ostream& out, const SeifertData& d) {
  out << "e " << d.e << '\n';
  for (const Rational& r : d.slopes) out << "slope " << r.fraction() << '\n';
}

std::string format_seifert(const Integer& e, const std::vector<Rational>& slopes) {
  std::string s = "(" + e.get_str() + ";";
  for (std::size_t i = 0; i < slopes.size(); ++i) s += (i ? ", " : " ") + slopes[i].str();
  return s + ")";
}

}  // namespace surgobs::seifert
