#include "bfh/torus_algebra.hpp"

namespace bfh {

bool is_idempotent(Alg a) { return a == Alg::I0 || a == Alg::I1; }

bool is_chord(Alg a) {
  return a != Alg::Zero && !is_idempotent(a);
}

Alg left_idempotent(Alg a) {
  switch (a) {
    case Alg::I0:
      return Alg::I0;
    case Alg::I1:
      return Alg::I1;
    case Alg::R1:
    case Alg::R3:
    case Alg::R12:
    case Alg::R123:
      return Alg::I0;
    case Alg::R2:
    case Alg::R23:
      return Alg::I1;
    case Alg::Zero:
      break;
  }
  throw MathError("zero has no idempotent endpoints");
}

Alg right_idempotent(Alg a) {
  switch (a) {
    case Alg::I0:
      return Alg::I0;
    case Alg::I1:
      return Alg::I1;
    case Alg::R1:
    case Alg::R3:
    case Alg::R23:
    case Alg::R123:
      return Alg::I1;
    case Alg::R2:
    case Alg::R12:
      return Alg::I0;
    case Alg::Zero:
      break;
  }
  throw MathError("zero has no idempotent endpoints");
}

Alg algebra_multiply(Alg a, Alg b) {
  if (a == Alg::Zero || b == Alg::Zero) return Alg::Zero;
  if (is_idempotent(a)) return (a == left_idempotent(b)) ? b : Alg::Zero;
  if (is_idempotent(b)) return (right_idempotent(a) == b) ? a : Alg::Zero;
  // Chord products: only the quiver-path concatenations below survive the
  // relations r2*r1 = r3*r2 = 0.
  if (a == Alg::R1 && b == Alg::R2) return Alg::R12;
  if (a == Alg::R2 && b == Alg::R3) return Alg::R23;
  if (a == Alg::R1 && b == Alg::R23) return Alg::R123;
  if (a == Alg::R12 && b == Alg::R3) return Alg::R123;
  return Alg::Zero;
}

GradingElement grading_of(Alg a) {
  static const GradingElement g1(Rational(-1, 2), Rational(1, 2),
                                 Rational(-1, 2));
  static const GradingElement g2(Rational(-1, 2), Rational(1, 2),
                                 Rational(1, 2));
  static const GradingElement g3(Rational(-1, 2), Rational(-1, 2),
                                 Rational(1, 2));
  switch (a) {
    case Alg::I0:
    case Alg::I1:
      return grading_identity();
    case Alg::R1:
      return g1;
    case Alg::R2:
      return g2;
    case Alg::R3:
      return g3;
    case Alg::R12:
      return multiply(g1, g2);
    case Alg::R23:
      return multiply(g2, g3);
    case Alg::R123:
      return multiply(multiply(g1, g2), g3);
    case Alg::Zero:
      break;
  }
  throw MathError("ZeroHasNoGrading");
}

std::string algebra_name(Alg a) {
  switch (a) {
    case Alg::Zero:
      return "0";
    case Alg::I0:
      return "i0";
    case Alg::I1:
      return "i1";
    case Alg::R1:
      return "r1";
    case Alg::R2:
      return "r2";
    case Alg::R3:
      return "r3";
    case Alg::R12:
      return "r12";
    case Alg::R23:
      return "r23";
    case Alg::R123:
      return "r123";
  }
  throw MathError("unknown algebra element");
}

Alg parse_algebra(std::string_view name) {
  for (Alg a : kAlgebraElements)
    if (algebra_name(a) == name) return a;
  throw ParseError("unknown algebra element: " + std::string(name));
}

ChordSequence::ChordSequence(std::vector<Alg> cs) : chords(std::move(cs)) {
  for (Alg c : chords) {
    if (!is_chord(c))
      throw MathError("chord sequences contain rho elements only");
  }
  for (std::size_t i = 0; i + 1 < chords.size(); ++i) {
    if (right_idempotent(chords[i]) != left_idempotent(chords[i + 1]))
      throw MathError("chord sequence is not quiver-composable: " +
                      algebra_name(chords[i]) + " then " +
                      algebra_name(chords[i + 1]));
  }
}

}  // namespace bfh
