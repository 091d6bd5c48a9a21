// The noncommutative grading group G of triples (j; p, q): j the Maslov
// component, (p, q) the spin^c component, with the determinant-twisted group
// law.  Includes the rational extension G_Q, canonical primitive forms for
// cyclic indeterminacy subgroups, and left/right/double coset arithmetic.
#pragma once

#include "bfh/rational.hpp"

#include <optional>
#include <vector>

namespace bfh {

enum class GradingRegime { Integral, RationalExt };

// An element (j; p, q) of G or of its rational extension G_Q.  In the
// integral group all components are half-integers and p + q is an integer.
struct GradingElement {
  Rational maslov;   // j
  Rational spinc_p;  // p
  Rational spinc_q;  // q
  GradingRegime regime = GradingRegime::Integral;

  GradingElement() = default;
  GradingElement(Rational j, Rational p, Rational q,
                 GradingRegime r = GradingRegime::Integral);

  bool operator==(const GradingElement& o) const {
    return maslov == o.maslov && spinc_p == o.spinc_p && spinc_q == o.spinc_q;
  }
  bool is_identity() const {
    return maslov == 0 && spinc_p == 0 && spinc_q == 0;
  }
};

// (j1 + j2 + (p1*q2 - q1*p2); p1 + p2, q1 + q2).
GradingElement multiply(const GradingElement& a, const GradingElement& b);

// (-j; -p, -q); the commutator term vanishes on (a, a^{-1}).
GradingElement inverse(const GradingElement& a);

// Componentwise scaling (t*j; t*p, t*q) in G_Q; agrees with the m-fold group
// power for integer t because the commutator vanishes on collinear elements.
GradingElement rational_power(const GradingElement& a, const Rational& t);

GradingElement grading_identity();

// The central element lambda = (1; 0, 0).
GradingElement central_lambda();

// Canonical primitive form of the cyclic subgroup direction of g: scaled so
// the spin^c pair is a primitive integer vector with lexicographically
// positive sign; if the spin^c pair is (0,0), the Maslov component is made
// positive.  Identity maps to identity.
GradingElement canonical_primitive(const GradingElement& g);

// Generator of the cyclic subgroup generated by the given elements (identity
// entries ignored).  Returns nullopt when all inputs are the identity.
// Throws MathError if the elements are not collinear (the subgroup would not
// be cyclic, which the catalog never produces).
std::optional<GradingElement> cyclic_generator(
    const std::vector<GradingElement>& elements);

// All g in the integral group with g^k = h for some k >= 1, ordered by k
// ascending (so the full element h itself comes first).
std::vector<GradingElement> divisor_candidates(const GradingElement& h);

// ASCII form "(j;p,q)" with canonical rationals; parse round-trips exactly.
std::string to_string(const GradingElement& g);
GradingElement parse_grading(std::string_view text,
                             GradingRegime regime = GradingRegime::Integral);

// A double (or one-sided) coset <f> g <h>: the grading of a generator in the
// G-set of a bordered invariant.  f acts on the left (type A side), h on the
// right (type D side); either may be absent.
struct CosetGrading {
  std::optional<GradingElement> left_indeterminacy;   // f, generating <f>
  std::optional<GradingElement> right_indeterminacy;  // h
  GradingElement representative;
};

// True iff f^a * x * h^b = y for some integers a, b (absent sides omitted).
bool coset_equal(const CosetGrading& x, const CosetGrading& y);

// Maslov component of the unique coset representative with spin^c component
// (0, 0), obtained by solving f^s * rep * h^t over the rationals.  Throws
// MathError("NoRationalSolution") when rep's spin^c component is outside the
// rational span, MathError("AmbiguousNormalization") when distinct solutions
// give different Maslov values.
Rational normalize_spinc(const CosetGrading& g);

// True iff the spin^c components of x and y differ by an element of the
// integer span of the spin^c components of f and h.  Throws
// MathError("MismatchedIndeterminacy") unless both share the same
// indeterminacy pair.
bool same_spinc(const CosetGrading& x, const CosetGrading& y);

}  // namespace bfh
