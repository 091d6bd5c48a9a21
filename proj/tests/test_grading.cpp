#include "doctest.h"

#include "bfh/grading.hpp"

#include <random>
#include <vector>

using namespace bfh;

namespace {

GradingElement ge(const char* text) { return parse_grading(text); }

// Random valid elements of the integral group: half-integer components with
// p + q an integer.
std::vector<GradingElement> random_sample(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-8, 8);
  std::vector<GradingElement> out;
  while (out.size() < n) {
    int a = d(rng), b = d(rng), c = d(rng);
    if ((a + b) % 2 != 0) continue;
    out.emplace_back(Rational(c, 2), Rational(a, 2), Rational(b, 2));
  }
  return out;
}

}  // namespace

TEST_CASE("group law on frozen examples") {
  CHECK(multiply(ge("(-1/2;1/2,1/2)"), ge("(-1/2;1/2,-1/2)")) ==
        ge("(-3/2;1,0)"));
  // lambda = (1;0,0) is central.
  for (const auto& g : random_sample(20, 7)) {
    CHECK(multiply(central_lambda(), g) == multiply(g, central_lambda()));
    CHECK(multiply(central_lambda(), g) ==
          GradingElement(g.maslov + 1, g.spinc_p, g.spinc_q));
  }
  CHECK(multiply(ge("(-1/2;-1,0)"), ge("(-1/2;-1,0)")) == ge("(-1;-2,0)"));
}

TEST_CASE("group law properties") {
  auto sample = random_sample(50, 11);
  // Associativity over all triples from the sample (spot slice: full cube is
  // 125k products; check a deterministic stride to keep the suite fast).
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = 0; j < sample.size(); j += 3)
      for (std::size_t k = 0; k < sample.size(); k += 7) {
        CHECK(multiply(multiply(sample[i], sample[j]), sample[k]) ==
              multiply(sample[i], multiply(sample[j], sample[k])));
      }
  // Noncommutativity witness: gr(rho1) and gr(rho2) fail to commute, the two
  // products differing by 1 in the Maslov component.
  GradingElement r1 = ge("(-1/2;1/2,-1/2)");
  GradingElement r2 = ge("(-1/2;1/2,1/2)");
  GradingElement ab = multiply(r1, r2);
  GradingElement ba = multiply(r2, r1);
  CHECK(ab.spinc_p == ba.spinc_p);
  CHECK(ab.spinc_q == ba.spinc_q);
  CHECK(ab.maslov - ba.maslov == 1);
}

TEST_CASE("inverse") {
  CHECK(inverse(ge("(-1/2;1/2,-1/2)")) == ge("(1/2;-1/2,1/2)"));
  CHECK(inverse(grading_identity()) == grading_identity());
  auto sample = random_sample(100, 3);
  for (std::size_t i = 0; i + 1 < sample.size(); i += 2) {
    const auto& a = sample[i];
    const auto& b = sample[i + 1];
    CHECK(multiply(a, inverse(a)) == grading_identity());
    CHECK(inverse(multiply(a, b)) == multiply(inverse(b), inverse(a)));
  }
}

TEST_CASE("rational_power") {
  CHECK(rational_power(ge("(-1;4,-2)"), Rational(1, 2)) == ge("(-1/2;2,-1)"));
  CHECK(rational_power(ge("(-1;4,-2)"), 0) == grading_identity());
  GradingElement scaled = rational_power(ge("(-3;4,-2)"), Rational(3, 4));
  CHECK(scaled == ge("(-9/4;3,-3/2)"));
  CHECK(scaled.regime == GradingRegime::RationalExt);
  // Integer powers agree with iterated multiplication.
  for (const auto& g : random_sample(10, 21)) {
    GradingElement acc = grading_identity();
    for (int m = 0; m <= 4; ++m) {
      CHECK(rational_power(g, m) == acc);
      acc = multiply(acc, g);
    }
  }
}

TEST_CASE("serialization round-trip") {
  for (const char* text :
       {"(0;0,0)", "(-3/2;1,0)", "(-1/2;-7/2,3/2)", "(7/2;-3,2)"}) {
    CHECK(to_string(parse_grading(text)) == text);
  }
  CHECK_THROWS_AS(parse_grading("nonsense"), ParseError);
  CHECK_THROWS_AS(parse_grading("(1;2)"), ParseError);
}

TEST_CASE("integral regime validation") {
  CHECK_THROWS_AS(GradingElement(Rational(1, 3), 0, 0), MathError);
  // p + q must be an integer in the integral group.
  CHECK_THROWS_AS(GradingElement(0, Rational(1, 2), 0), MathError);
  CHECK_NOTHROW(GradingElement(0, Rational(1, 2), Rational(1, 2)));
  CHECK_NOTHROW(GradingElement(Rational(1, 3), 0, 0,
                               GradingRegime::RationalExt));
}

TEST_CASE("canonical primitive form") {
  CHECK(canonical_primitive(ge("(-1;4,-2)")) == ge("(-1/2;2,-1)"));
  CHECK(canonical_primitive(ge("(3/2;0,1)")) == ge("(3/2;0,1)"));
  CHECK(canonical_primitive(ge("(-3/2;0,-1)")) == ge("(3/2;0,1)"));
  CHECK(canonical_primitive(ge("(-2;0,0)")) == ge("(2;0,0)"));
  CHECK(canonical_primitive(grading_identity()) == grading_identity());
}

TEST_CASE("cyclic subgroup generator and divisors") {
  auto gen = cyclic_generator({ge("(-1;4,-2)"), ge("(-2;8,-4)")});
  REQUIRE(gen.has_value());
  CHECK(*gen == ge("(-1;4,-2)"));
  gen = cyclic_generator({ge("(-1;4,-2)"), ge("(-1/2;2,-1)")});
  REQUIRE(gen.has_value());
  CHECK(*gen == ge("(-1/2;2,-1)"));
  CHECK(!cyclic_generator({grading_identity()}).has_value());
  CHECK_THROWS_AS(cyclic_generator({ge("(0;1,1)"), ge("(0;1,-1)")}),
                  MathError);

  auto divisors = divisor_candidates(ge("(-1;4,-2)"));
  REQUIRE(divisors.size() == 2);
  CHECK(divisors[0] == ge("(-1;4,-2)"));
  CHECK(divisors[1] == ge("(-1/2;2,-1)"));
}

TEST_CASE("normalize_spinc on the frozen values") {
  GradingElement f = ge("(3/2;0,1)");
  GradingElement h0 = ge("(-1;4,-2)");
  GradingElement h1 = ge("(-3;4,-2)");
  CHECK(normalize_spinc({f, h0, ge("(0;-1,1)")}) == Rational(-3, 2));
  CHECK(normalize_spinc({f, h0, grading_identity()}) == 0);
  CHECK(normalize_spinc({f, h1, ge("(7/2;-3,2)")}) == -1);

  // Invariance under the coset action rep -> f^a rep h^b.
  CosetGrading base{f, h0, ge("(0;-1,1)")};
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      GradingElement moved = multiply(
          multiply(rational_power(f, a), base.representative),
          rational_power(h0, b));
      CHECK(normalize_spinc({f, h0, moved}) == Rational(-3, 2));
    }
  }
}

TEST_CASE("same_spinc") {
  GradingElement f = ge("(3/2;0,1)");
  GradingElement h = ge("(-1;4,-2)");
  CosetGrading x{f, h, grading_identity()};
  CHECK(!same_spinc(x, {f, h, ge("(1/2;-2,1)")}));
  CHECK(same_spinc(x, x));
  // (4,-1) = 1*(4,-2) + 1*(0,1): inside the integer span.
  CHECK(same_spinc(x, {f, h, ge("(-1;4,-1)")}));
  CHECK_THROWS_AS(same_spinc(x, CosetGrading{f, f, grading_identity()}),
                  MathError);

  // Equivalence relation on a finite set of representatives.
  std::vector<CosetGrading> gens;
  for (const auto& g : random_sample(12, 5)) gens.push_back({f, h, g});
  for (const auto& a : gens) CHECK(same_spinc(a, a));
  for (const auto& a : gens)
    for (const auto& b : gens) CHECK(same_spinc(a, b) == same_spinc(b, a));
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& c : gens)
        if (same_spinc(a, b) && same_spinc(b, c)) CHECK(same_spinc(a, c));
}

TEST_CASE("coset equality") {
  GradingElement f = ge("(3/2;0,1)");
  GradingElement h = ge("(-1;4,-2)");
  CosetGrading x{f, h, ge("(0;-1,1)")};
  GradingElement moved =
      multiply(multiply(rational_power(f, 2), x.representative),
               rational_power(h, -1));
  CHECK(coset_equal(x, {f, h, moved}));
  CHECK(!coset_equal(x, {f, h, ge("(1;-1,1)")}));
  // One-sided and empty indeterminacies.
  CosetGrading left_only{f, std::nullopt, ge("(0;0,0)")};
  CHECK(coset_equal(left_only, {f, std::nullopt, rational_power(f, 3)}));
  CHECK(!coset_equal(left_only, {f, std::nullopt, ge("(1;0,0)")}));
  CosetGrading bare{std::nullopt, std::nullopt, ge("(1;2,3)")};
  CHECK(coset_equal(bare, bare));
}
