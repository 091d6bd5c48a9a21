// First homology of torus gluings: 2x2 boundary-gluing matrices, the
// presentation coming from gluing a knot exterior to the fixed piece, the
// order formula, twist orbits, and the classification of cyclic slope-2
// gluings.
#pragma once

#include "bfh/snf.hpp"
#include "bfh/type_d.hpp"  // Diagnostics

#include <string>
#include <vector>

namespace bfh {

// The boundary map [[q, r], [p, s]] sending (mu', lambda') to
// (q mu + r lambda, p mu + s lambda); a slope-p/q gluing.
struct GluingMatrix {
  Integer q = 1, r = 0, p = 0, s = 1;

  Integer det() const { return q * s - r * p; }
  bool operator==(const GluingMatrix& o) const = default;
};

// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
  std::vector<Integer> invariant_factors;  // each > 1, each divides the next
  int free_rank = 0;

  bool operator==(const AbelianGroup& o) const = default;
  // 0 when the free rank is positive, else the product of the factors.
  Integer order() const;
};

// "Z/a ⊕ Z/b ⊕ Z^r"; the trivial group prints as "0".
std::string to_string(const AbelianGroup& g);

// Warnings/errors for matrices that are not orientation-reversing boundary
// homeomorphisms (determinant != -1); determinant +1 is normalizable, other
// determinants are errors.
Diagnostics validate_gluing(const GluingMatrix& m);

// Fixes the det = -1 convention: det = +1 inputs get their first row negated
// (a homology-neutral re-parameterization of the glued-on boundary).
GluingMatrix normalize_gluing(const GluingMatrix& m);

// H1 of the closed manifold obtained from the slope given by m, via the
// presentation <mu, x | 2p mu = 0, 2x = s mu>.
AbelianGroup h1_of_gluing(const GluingMatrix& m);

// 4 * d * torsion_order * |p_slope|; zero signals a rational-longitude
// filling (positive first Betti number).
Integer order_formula(const Integer& p_slope, const Integer& d,
                      const Integer& torsion_order);

// Pre-composition with the boundary Dehn twist power [[1, n], [0, 1]]:
// [[q, r + n q], [p, s + n p]].  Preserves the slope p/q.
GluingMatrix twist_orbit(const GluingMatrix& m, const Integer& n);

// All matrices with |p| = 2, |det| = 1, entries bounded by `bound` in
// absolute value, whose gluing homology is cyclic of order 8 — reported
// modulo boundary twists on both sides, one canonical representative per
// orbit (the prototype [[1, 0], [p, -1]] per sign of p).
std::vector<GluingMatrix> classify_cyclic_slope2(int bound);

// Text format: a single line "matrix q r p s".
GluingMatrix parse_gluing(const std::string& text, Diagnostics* diag = nullptr);
std::string serialize_gluing(const GluingMatrix& m);

}  // namespace bfh
