#include "surgobs/forms.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace surgobs {

Inertia congruence_diagonalize(const SymIntMatrix& q) {
  const std::size_t n = q.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(q(i, j));

  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;

  auto drop = [&live](std::size_t idx) { live.erase(std::find(live.begin(), live.end(), idx)); };

  Inertia out;
  while (!live.empty()) {
    std::optional<std::size_t> pivot;
    for (std::size_t i : live)
      if (!a[i][i].is_zero()) {
        pivot = i;
        break;
      }

    if (pivot) {
      const std::size_t p = *pivot;
      const Rational d = a[p][p];
      (d.sign() > 0 ? out.b_plus : out.b_minus) += 1;
      drop(p);
      for (std::size_t r : live) {
        if (a[r][p].is_zero()) continue;
        const Rational f = a[r][p] / d;
        for (std::size_t s : live) a[r][s] -= f * a[p][s];
      }
      continue;
    }

    // All diagonal entries vanish: split off a hyperbolic block.
    std::optional<std::pair<std::size_t, std::size_t>> block;
    for (std::size_t i : live) {
      for (std::size_t j : live)
        if (j != i && !a[i][j].is_zero()) {
          block = {i, j};
          break;
        }
      if (block) break;
    }
    if (!block) {
      out.b_zero += static_cast<int>(live.size());
      break;
    }
    const auto [i, j] = *block;
    const Rational off = a[i][j];
    out.b_plus += 1;
    out.b_minus += 1;
    drop(i);
    drop(j);
    // Schur complement against [[0, off], [off, 0]], whose inverse is
    // [[0, 1/off], [1/off, 0]].
    std::vector<std::vector<Rational>> next = a;
    for (std::size_t r : live)
      for (std::size_t s : live)
        next[r][s] = a[r][s] - (a[r][i] * a[j][s] + a[r][j] * a[i][s]) / off;
    a = std::move(next);
  }
  return out;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  const std::size_t k = std::min(d.rows(), d.cols());
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(d(i, i));
  return out;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithForm sf{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix& a = sf.d;

  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row_multiple(dst, src, f);
    sf.u.add_row_multiple(dst, src, f);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col_multiple(dst, src, f);
    sf.v.add_col_multiple(dst, src, f);
  };

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // Smallest nonzero magnitude in the trailing block, first in row-major order.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (!best || abs(a(i, j)) < abs(a(best->first, best->second))) best = {i, j};
        }
      if (!best) return sf;

      a.swap_rows(t, best->first);
      sf.u.swap_rows(t, best->first);
      a.swap_cols(t, best->second);
      sf.v.swap_cols(t, best->second);

      const Integer pivot = a(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row_op(i, t, -floor_div(a(i, t), pivot));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col_op(j, t, -floor_div(a(t, j), pivot));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % pivot != 0) {
            offender = i;
            break;
          }
      if (offender) {
        row_op(t, *offender, 1);
        continue;
      }
      break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      sf.u.negate_row(t);
    }
  }
  return sf;
}

std::vector<Integer> cokernel_invariants(const IntMatrix& m) {
  std::vector<Integer> out;
  const SmithForm sf = smith_normal_form(m);
  for (const Integer& d : sf.diagonal())
    if (d != 1) out.push_back(d);
  // Columns beyond the diagonal of a wide matrix do not add generators of the
  // cokernel; rows beyond it in a tall matrix each add a free summand.
  for (std::size_t i = std::min(m.rows(), m.cols()); i < m.rows(); ++i) out.emplace_back(0);
  return out;
}

}  // namespace surgobs
