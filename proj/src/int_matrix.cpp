#include "semik/int_matrix.hpp"

#include <stdexcept>

namespace semik {

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

RationalInverse rational_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = m.rows();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw std::invalid_argument("singular matrix has no inverse");
    std::swap(a[k], a[p]);
    Rat piv = a[k][k];
    for (std::size_t j = 0; j < 2 * n; ++j) a[k][j] /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  Int den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) den = lcm_int(den, rat_den(a[i][n + j]));
  RationalInverse out{IntMatrix(n, n), den};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = a[i][n + j] * Rat(den);
      out.numerators(i, j) = rat_num(v);
    }
  return out;
}

IntMatrix adjugate2(const IntMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("adjugate2 needs a 2x2 matrix");
  IntMatrix a(2, 2);
  a(0, 0) = m(1, 1);
  a(0, 1) = -m(0, 1);
  a(1, 0) = -m(1, 0);
  a(1, 1) = m(0, 0);
  return a;
}

}  // namespace semik
