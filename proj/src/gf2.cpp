#include "surgobs/gf2.hpp"

#include <stdexcept>

namespace surgobs {

Gf2Vector Gf2Matrix::apply(const Gf2Vector& x) const {
  if (x.size() != cols) throw std::invalid_argument("gf2 vector size mismatch");
  Gf2Vector out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = (rows[i] & x).count() % 2 == 1;
  return out;
}

std::vector<Gf2Vector> Gf2AffineSpace::elements() const {
  const std::size_t k = kernel.size();
  if (k >= 8 * sizeof(std::size_t) - 1) throw std::length_error("affine space too large to enumerate");
  std::vector<Gf2Vector> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Gf2Vector v = particular;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) v ^= kernel[i];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Gf2AffineSpace> gf2_affine_solve(const Gf2Matrix& a, const Gf2Vector& b) {
  const std::size_t n = a.cols;
  const std::size_t m = a.rows.size();
  if (b.size() != m) throw std::invalid_argument("gf2 right-hand side size mismatch");

  // Augmented rows: columns [0, n) are A, column n is b.
  std::vector<Gf2Vector> rows;
  rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Gf2Vector r = a.rows[i];
    r.resize(n + 1);
    r[n] = b[i];
    rows.push_back(std::move(r));
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t p = rank;
    while (p < m && !rows[p][c]) ++p;
    if (p == m) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t i = 0; i < m; ++i)
      if (i != rank && rows[i][c]) rows[i] ^= rows[rank];
    pivot_cols.push_back(c);
    ++rank;
  }
  for (std::size_t i = rank; i < m; ++i)
    if (rows[i][n]) return std::nullopt;

  Gf2AffineSpace out;
  out.particular = Gf2Vector(n);
  for (std::size_t k = 0; k < rank; ++k) out.particular[pivot_cols[k]] = rows[k][n];

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Gf2Vector v(n);
    v[f] = true;
    for (std::size_t k = 0; k < rank; ++k)
      if (rows[k][f]) v[pivot_cols[k]] = true;
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::size_t gf2_rank(std::vector<Gf2Vector> vectors) {
  if (vectors.empty()) return 0;
  Gf2Span span(vectors.front().size());
  for (auto& v : vectors) span.insert(std::move(v));
  return span.rank();
}

void Gf2Span::reduce(Gf2Vector& v) const {
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (v[pivots_[k]]) v ^= basis_[k];
}

bool Gf2Span::insert(Gf2Vector v) {
  if (v.size() != dim_) throw std::invalid_argument("gf2 span dimension mismatch");
  reduce(v);
  const std::size_t p = v.find_first();
  if (p == Gf2Vector::npos) return false;
  // Keep the basis fully reduced so that reduce() is a single pass.
  for (auto& b : basis_)
    if (b[p]) b ^= v;
  basis_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool Gf2Span::contains(Gf2Vector v) const {
  if (v.size() != dim_) throw std::invalid_argument("gf2 span dimension mismatch");
  reduce(v);
  return v.none();
}

}  // namespace surgobs
