#include "doctest.h"

#include "bfh/torus_algebra.hpp"

#include <map>

using namespace bfh;

TEST_CASE("multiplication table is exactly the quiver products") {
  // Expected nonzero products: idempotent units plus the four quiver-path
  // concatenations.
  std::map<std::pair<Alg, Alg>, Alg> expected;
  for (Alg a : kAlgebraElements) {
    if (a == Alg::Zero) continue;
    expected[{left_idempotent(a), a}] = a;
    expected[{a, right_idempotent(a)}] = a;
  }
  expected[{Alg::R1, Alg::R2}] = Alg::R12;
  expected[{Alg::R2, Alg::R3}] = Alg::R23;
  expected[{Alg::R1, Alg::R23}] = Alg::R123;
  expected[{Alg::R12, Alg::R3}] = Alg::R123;

  for (Alg a : kAlgebraElements) {
    for (Alg b : kAlgebraElements) {
      auto it = expected.find({a, b});
      Alg want = it == expected.end() ? Alg::Zero : it->second;
      CHECK(algebra_multiply(a, b) == want);
    }
  }
  // The defining relations, spelled out.
  CHECK(algebra_multiply(Alg::R2, Alg::R1) == Alg::Zero);
  CHECK(algebra_multiply(Alg::R3, Alg::R2) == Alg::Zero);
  CHECK(algebra_multiply(Alg::I0, Alg::R1) == Alg::R1);
  CHECK(algebra_multiply(Alg::R1, Alg::I0) == Alg::Zero);
}

TEST_CASE("multiplication is associative (exhaustive 9x9x9)") {
  for (Alg a : kAlgebraElements)
    for (Alg b : kAlgebraElements)
      for (Alg c : kAlgebraElements)
        CHECK(algebra_multiply(algebra_multiply(a, b), c) ==
              algebra_multiply(a, algebra_multiply(b, c)));
}

TEST_CASE("gradings of generators") {
  CHECK(grading_of(Alg::R1) == parse_grading("(-1/2;1/2,-1/2)"));
  CHECK(grading_of(Alg::R2) == parse_grading("(-1/2;1/2,1/2)"));
  CHECK(grading_of(Alg::R3) == parse_grading("(-1/2;-1/2,1/2)"));
  CHECK(grading_of(Alg::I0) == grading_identity());
  CHECK(grading_of(Alg::I1) == grading_identity());
  CHECK(grading_of(Alg::R123) == parse_grading("(-1/2;1/2,1/2)"));
  CHECK_THROWS_AS(grading_of(Alg::Zero), MathError);
}

TEST_CASE("grading is multiplicative on nonzero products") {
  for (Alg a : kAlgebraElements) {
    for (Alg b : kAlgebraElements) {
      if (a == Alg::Zero || b == Alg::Zero) continue;
      Alg ab = algebra_multiply(a, b);
      if (ab == Alg::Zero) continue;
      CHECK(grading_of(ab) == multiply(grading_of(a), grading_of(b)));
    }
  }
}

TEST_CASE("names round-trip") {
  for (Alg a : kAlgebraElements) CHECK(parse_algebra(algebra_name(a)) == a);
  CHECK_THROWS_AS(parse_algebra("r13"), ParseError);
}

TEST_CASE("chord sequences require quiver composability") {
  CHECK_NOTHROW(ChordSequence({Alg::R3, Alg::R2, Alg::R1}));
  CHECK_NOTHROW(ChordSequence({Alg::R2, Alg::R1}));
  CHECK_THROWS_AS(ChordSequence({Alg::R1, Alg::R1}), MathError);
  CHECK_THROWS_AS(ChordSequence({Alg::I0}), MathError);
}
