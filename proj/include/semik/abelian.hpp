#pragma once

#include <string>
#include <vector>

#include "semik/int_matrix.hpp"
#include "semik/smith.hpp"

namespace semik {

// Finitely generated abelian group in invariant-factor normal form:
// Z^free_rank + Z/d1 + ... + Z/dt with 2 <= d1 | d2 | ... | dt.
// Factors equal to 1 are dropped.
struct FgAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;

  static FgAbelianGroup free(std::size_t rank) { return {rank, {}}; }
  static FgAbelianGroup zero() { return {0, {}}; }

  // Normalizes an arbitrary torsion list into a divisor chain (factors of 0
  // count toward the free rank, factors of 1 are dropped).
  static FgAbelianGroup from_parts(std::size_t rank, const std::vector<Int>& torsion);

  bool is_zero() const { return free_rank == 0 && invariant_factors.empty(); }
  bool operator==(const FgAbelianGroup& o) const {
    return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
  }

  std::string str() const;
};

FgAbelianGroup cokernel(const IntMatrix& m);
FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);
bool is_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b);

// (K0, K1) attached to an algebra in the emitted formulas.
struct GradedKPair {
  FgAbelianGroup k0, k1;
  bool operator==(const GradedKPair& o) const { return k0 == o.k0 && k1 == o.k1; }
  std::string str() const { return "(" + k0.str() + ", " + k1.str() + ")"; }
};

inline GradedKPair direct_sum(const GradedKPair& a, const GradedKPair& b) {
  return {direct_sum(a.k0, b.k0), direct_sum(a.k1, b.k1)};
}

}  // namespace semik
