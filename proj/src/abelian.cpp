#include "semik/abelian.hpp"

#include <algorithm>

namespace semik {

FgAbelianGroup FgAbelianGroup::from_parts(std::size_t rank, const std::vector<Int>& torsion) {
  // Recombining into a divisor chain is a Smith reduction of the diagonal
  // matrix with the given torsion orders; avoids factoring.
  std::vector<Int> nonunit;
  for (const Int& d : torsion) {
    Int a = abs_int(d);
    if (a == 0) {
      ++rank;
      continue;
    }
    if (a > 1) nonunit.push_back(a);
  }
  if (nonunit.size() <= 1) return {rank, nonunit};
  IntMatrix diag(nonunit.size(), nonunit.size());
  for (std::size_t i = 0; i < nonunit.size(); ++i) diag(i, i) = nonunit[i];
  SmithResult snf = smith_normal_form(diag);
  std::vector<Int> chain;
  for (std::size_t i = 0; i < nonunit.size(); ++i)
    if (snf.s(i, i) > 1) chain.push_back(snf.s(i, i));
  return {rank, chain};
}

std::string FgAbelianGroup::str() const {
  if (is_zero()) return "0";
  std::string s;
  if (free_rank == 1)
    s = "Z";
  else if (free_rank > 1)
    s = "Z^" + std::to_string(free_rank);
  for (const Int& d : invariant_factors) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.str();
  }
  return s;
}

FgAbelianGroup cokernel(const IntMatrix& m) {
  // Z^rows / column-span(m): read the invariant factors off the Smith form.
  SmithResult snf = smith_normal_form(m);
  std::size_t nonzero = 0;
  std::vector<Int> torsion;
  std::size_t k = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < k; ++i) {
    if (snf.s(i, i) == 0) continue;
    ++nonzero;
    if (snf.s(i, i) > 1) torsion.push_back(snf.s(i, i));
  }
  return {m.rows() - nonzero, torsion};
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<Int> torsion = a.invariant_factors;
  torsion.insert(torsion.end(), b.invariant_factors.begin(), b.invariant_factors.end());
  return FgAbelianGroup::from_parts(a.free_rank + b.free_rank, torsion);
}

bool is_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b) { return a == b; }

}  // namespace semik
