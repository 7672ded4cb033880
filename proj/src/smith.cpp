#include "semik/smith.hpp"

#include <cassert>
#include <stdexcept>

namespace semik {

namespace {

// Pivot rule: smallest nonzero absolute value in the trailing block,
// ties broken by row-major position. Keeps u, v reproducible.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = abs_int(a(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  std::size_t r = m.rows(), c = m.cols();
  SmithResult out{m, IntMatrix::identity(r), IntMatrix::identity(c)};
  IntMatrix& a = out.s;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;
  std::size_t t = 0;
  while (t < r && t < c) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(a, t, pi, pj)) break;  // trailing block is zero
    if (pi != t) {
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
    }
    if (pj != t) {
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);
    }
    bool dirty = true;
    while (dirty) {
      dirty = false;
      // clear column t below the pivot
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);
        a.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (a(i, t) != 0) {
          // remainder strictly smaller: promote it to the pivot slot
          a.swap_rows(t, i);
          u.swap_rows(t, i);
          dirty = true;
        }
      }
      // clear row t right of the pivot
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        a.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (a(t, j) != 0) {
          a.swap_cols(t, j);
          v.swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // pivot must divide the whole trailing block for the divisor chain
      for (std::size_t i = t + 1; i < r && !dirty; ++i)
        for (std::size_t j = t + 1; j < c && !dirty; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row(t, i, 1);
            u.add_row(t, i, 1);
            dirty = true;
          }
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
    ++t;
  }
  return out;
}

IntMatrix column_hnf(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("column_hnf needs a square matrix");
  std::size_t n = m.rows();
  IntMatrix h = m;
  if (determinant(h) == 0) throw std::invalid_argument("column_hnf needs nonzero determinant");
  // Eliminate right of the diagonal with column gcd steps, top row first.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (h(i, j) == 0) continue;
      ExtGcd e = ext_gcd(h(i, i), h(i, j));
      Int ai = h(i, i) / e.g, aj = h(i, j) / e.g;
      for (std::size_t k = 0; k < n; ++k) {
        Int ci = h(k, i), cj = h(k, j);
        h(k, i) = e.x * ci + e.y * cj;
        h(k, j) = ai * cj - aj * ci;
      }
    }
    if (h(i, i) < 0) h.negate_col(i);
    assert(h(i, i) > 0);
    // reduce earlier columns at this row into [0, pivot)
    for (std::size_t j = 0; j < i; ++j) {
      Int q = h(i, j) >= 0 ? Int(h(i, j) / h(i, i)) : Int(-((-h(i, j) + h(i, i) - 1) / h(i, i)));
      if (q != 0) h.add_col(j, i, -q);
    }
  }
  return h;
}

}  // namespace semik
