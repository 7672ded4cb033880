#pragma once

#include "semik/int_matrix.hpp"

namespace semik {

// u * m * v = s with u, v unimodular and s = diag(d1, d2, ...),
// d1 | d2 | ..., nonnegative, zeros trailing.
struct SmithResult {
  IntMatrix s, u, v;
};

SmithResult smith_normal_form(const IntMatrix& m);

// Column-style Hermite normal form: h = m * u for some u in GL_n(Z),
// h lower triangular with positive pivots and entries left of each pivot
// reduced into [0, pivot). Requires det(m) != 0. The unique representative
// of the coset m * GL_n(Z).
IntMatrix column_hnf(const IntMatrix& m);

}  // namespace semik
