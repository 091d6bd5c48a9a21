// Smith normal form over arbitrary-precision integers, plus the small
// integer-linear-system solver built on it.  Shared by the homology-of-gluing
// computations and the coset arithmetic of the grading group.
#pragma once

#include "bfh/rational.hpp"

#include <vector>

namespace bfh {

using IntMatrix = std::vector<std::vector<Integer>>;

struct SmithResult {
  IntMatrix d;  // diagonal form, d[i][i] >= 0, each dividing the next
  IntMatrix u;  // unimodular row transform
  IntMatrix v;  // unimodular column transform; u * a * v = d
};

// Deterministic pivoting: smallest nonzero absolute value, lowest index.
SmithResult smith_normal_form(const IntMatrix& a);

// True iff a * x = b admits an integer solution x.
bool has_integer_solution(const IntMatrix& a, const std::vector<Integer>& b);

// Invariant factors > 1 of the cokernel of a (as a map Z^cols -> Z^rows),
// together with the free rank of the cokernel.
struct CokernelDescription {
  std::vector<Integer> invariant_factors;  // factors > 1, each divides next
  int free_rank = 0;
};
CokernelDescription cokernel(const IntMatrix& a);

}  // namespace bfh
