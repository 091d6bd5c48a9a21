// Knot Floer surgery calculus on filtered complexes: staircase models,
// hat-flavor subquotient homology, the V_s/H_s correction integers,
// lens-space d-invariants, and the integral-surgery d-invariant formula.
#pragma once

#include "bfh/rational.hpp"
#include "bfh/type_d.hpp"  // Diagnostics

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bfh {

struct FilteredGenerator {
  std::string name;
  int alexander = 0;
  int maslov = 0;

  bool operator==(const FilteredGenerator& o) const = default;
};

// A Z (+) Z-filtered complex over F2 presented in the i = 0 slice: each
// differential entry raises or lowers the Alexander grading by exactly one
// (a horizontal respectively vertical arrow of the staircase/box pictures).
struct FilteredComplex {
  std::vector<FilteredGenerator> generators;
  std::vector<std::pair<std::string, std::string>> differentials;

  const FilteredGenerator& find(const std::string& name) const;
  int genus() const;  // top Alexander grading in absolute value
};

// d^2 = 0 over F2, arrow drops of exactly one with the matching Maslov
// change (+1 horizontal, -1 vertical), and Alexander multiset symmetry
// under negation.
Diagnostics validate_filtered(const FilteredComplex& c);

// The 2g+1-generator staircase of the (2,k) torus knot, g = (k-1)/2; the
// mirror flag negates and shifts the Maslov gradings, keeping the Alexander
// multiset.  Throws MathError("InvalidParameter") unless k is odd and >= 3.
FilteredComplex staircase(int k, bool mirror = false);

// staircase(k) plus a four-generator box summand centered at Alexander
// grading 0 (the local system whose hat-flavor homology adds two dimensions
// in the middle spin^c structure only).
FilteredComplex staircase_with_box(int k);

// Homology dimension of the subquotient C{max(i, j - s) = 0} for each
// s in [-genus, genus]; outside that range the dimension is 1.
std::map<int, int> a_hat_dimensions(const FilteredComplex& c);

struct SurgeryData {
  std::map<int, int> V;  // s >= 0; V_s = 0 for s >= genus
  std::map<int, int> H;  // H_s = V_{-s}
  int genus = 0;

  int v(int s) const;  // extends by V_s = 0 above genus, V_{-s} = V_s + s
  int h(int s) const { return v(-s); }
};

// Correction integers of a staircase complex via the closed lattice
// formula V_s = max(0, ceil((g - s)/2)).  Throws MathError("NotStaircase")
// for complexes that are not a pure staircase.
SurgeryData v_h(const FilteredComplex& c);

// The p correction terms of the lens space L(p, q) in the recursion's index
// order.  Throws MathError("NotCoprime").
std::vector<Rational> d_lens(const Integer& p, const Integer& q);

// d-invariants of p-surgery: residue s in 0..p-1 maps to
// d(L(p,1),[s]) - 2 max{V_s, H_{s-p}}.
std::vector<std::pair<int, Rational>> d_surgery(int p, const SurgeryData& data);

// True iff no pair of values differs by exactly gap.
bool grading_gap_obstruction(const std::vector<Rational>& values,
                             const Rational& gap);

// Per-residue homology dimensions of large p-surgery via the subquotient
// isomorphism, using the s <-> -s symmetry for residues above p/2.  Throws
// MathError("NotLargeSurgery") when p < 2 * genus.
std::map<int, int> large_surgery_profile(const FilteredComplex& c, int p);

// Text format: one declaration per line:
//   generator <name> <alexander> <maslov>
//   edge <src> <dst>         (arrow type inferred from the Alexander change)
FilteredComplex parse_cfk(const std::string& text,
                          Diagnostics* diag = nullptr);
std::string serialize_cfk(const FilteredComplex& c);

}  // namespace bfh
