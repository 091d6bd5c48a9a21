#include "doctest.h"

#include "bfh/gluing.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

using namespace bfh;

namespace {

std::string read_fixture(const std::string& rel) {
  std::ifstream in(std::string(BFH_FIXTURES_DIR) + "/" + rel);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Independent oracle for the structure of Z^2 / <(a, b), (c, d)> with
// nonzero determinant: the order is |det| and the group is Z/e ⊕ Z/(n/e)
// where e is the largest element order dividing... computed directly as the
// exponent via lattice-membership tests (Cramer's rule).
AbelianGroup brute_force_quotient(const Integer& a, const Integer& b,
                                  const Integer& c, const Integer& d) {
  Integer det = a * d - b * c;
  REQUIRE(det != 0);
  Integer n = det < 0 ? Integer(-det) : det;
  auto in_lattice = [&](const Integer& x, const Integer& y) {
    // Solve s(a, b) + t(c, d) = (x, y) over Q; integral iff det divides
    // both Cramer numerators.
    return (x * d - y * c) % det == 0 && (a * y - b * x) % det == 0;
  };
  auto order_of = [&](const Integer& x, const Integer& y) {
    for (Integer k = 1; k <= n; ++k)
      if (in_lattice(k * x, k * y)) return k;
    FAIL("element order exceeds the group order");
    return n;
  };
  // Exponent = max element order; scan representatives.
  Integer exponent = 1;
  for (Integer x = 0; x < n; ++x)
    for (Integer y = 0; y < n; ++y) {
      Integer o = order_of(x, y);
      if (o > exponent) exponent = o;
    }
  AbelianGroup g;
  if (exponent > 1) {
    if (exponent < n) g.invariant_factors.push_back(n / exponent);
    g.invariant_factors.push_back(exponent);
  }
  return g;
}

}  // namespace

TEST_CASE("published homology presentations") {
  CHECK(h1_of_gluing({1, 0, 2, -1}) == AbelianGroup{{8}, 0});
  CHECK(h1_of_gluing({1, 1, 2, 0}) == AbelianGroup{{2, 4}, 0});
  CHECK(h1_of_gluing({1, 0, 1, -1}) == AbelianGroup{{4}, 0});
  CHECK(to_string(AbelianGroup{{8}, 0}) == "Z/8");
  CHECK(to_string(AbelianGroup{{2, 4}, 0}) == "Z/2 ⊕ Z/4");
  CHECK(to_string(AbelianGroup{{}, 1}) == "Z");
  CHECK(to_string(AbelianGroup{{2}, 2}) == "Z/2 ⊕ Z^2");
  CHECK(to_string(AbelianGroup{{}, 0}) == "0");
}

TEST_CASE("presentation cokernels match a brute-force lattice oracle") {
  for (int p = -6; p <= 6; ++p) {
    if (p == 0) continue;
    for (int s = -6; s <= 6; ++s) {
      CAPTURE(p);
      CAPTURE(s);
      AbelianGroup got = h1_of_gluing({1, 0, p, s});
      AbelianGroup want = brute_force_quotient(2 * p, 0, -s, 2);
      CHECK(got == want);
    }
  }
}

TEST_CASE("rational-longitude fillings have positive first Betti number") {
  AbelianGroup g = h1_of_gluing({1, 0, 0, -1});
  CHECK(g.free_rank == 1);
  CHECK(g.order() == 0);
}

TEST_CASE("order formula") {
  CHECK(order_formula(2, 1, 1) == 8);
  CHECK(order_formula(1, 1, 2) == 8);
  CHECK(order_formula(0, 1, 1) == 0);
  CHECK(order_formula(-2, 1, 1) == 8);
  CHECK_THROWS_AS(order_formula(2, 0, 1), MathError);
  // Cross-module consistency: 4|p| equals the homology order of the
  // prototype slope-p gluing.
  for (int p = 1; p <= 6; ++p) {
    CAPTURE(p);
    CHECK(order_formula(p, 1, 1) == h1_of_gluing({1, 0, p, -1}).order());
  }
}

TEST_CASE("twist orbit") {
  GluingMatrix base{1, 0, 2, -1};
  CHECK(twist_orbit(base, 0) == base);
  for (int n = -5; n <= 5; ++n) {
    CAPTURE(n);
    GluingMatrix t = twist_orbit(base, n);
    CHECK(t == GluingMatrix{1, n, 2, 2 * n - 1});
    CHECK(t.det() == base.det());
    CHECK(h1_of_gluing(t) == h1_of_gluing(base));
  }
}

TEST_CASE("homology order 8 exactly at slope-over-two gluings") {
  for (int q = -10; q <= 10; ++q)
    for (int r = -10; r <= 10; ++r)
      for (int p = -10; p <= 10; ++p)
        for (int s = -10; s <= 10; ++s) {
          GluingMatrix m{q, r, p, s};
          Integer d = m.det();
          if (d != 1 && d != -1) continue;
          bool order8 = h1_of_gluing(m).order() == 8;
          if (order8 != (p == 2 || p == -2)) {
            CAPTURE(q);
            CAPTURE(r);
            CAPTURE(p);
            CAPTURE(s);
            CHECK(order8 == (p == 2 || p == -2));
          }
        }
  CHECK(true);  // counterexamples reported above
}

TEST_CASE("classification of cyclic slope-2 gluings") {
  auto reps = classify_cyclic_slope2(5);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0] == GluingMatrix{1, 0, -2, -1});
  CHECK(reps[1] == GluingMatrix{1, 0, 2, -1});
  for (const auto& m : reps) {
    CHECK(m.s % 2 != 0);
    CHECK(m.det() == -1);
    CHECK(h1_of_gluing(m) == AbelianGroup{{8}, 0});
  }
  CHECK(classify_cyclic_slope2(0).empty());
  // Stability: enlarging the bound finds no new orbits.
  CHECK(classify_cyclic_slope2(8) == reps);
}

TEST_CASE("determinant conventions") {
  CHECK(validate_gluing({1, 0, 2, -1}).ok());
  CHECK(validate_gluing({1, 0, 2, -1}).warnings.empty());
  Diagnostics plus = validate_gluing({1, -1, 2, -1});  // det +1
  CHECK(plus.ok());
  CHECK(plus.warnings.size() == 1);
  CHECK_FALSE(validate_gluing({1, 1, 2, 0}).ok());  // det -2

  GluingMatrix n = normalize_gluing({1, -1, 2, -1});
  CHECK(n.det() == -1);
  CHECK(h1_of_gluing(n) == h1_of_gluing({1, -1, 2, -1}));
  CHECK(normalize_gluing({1, 0, 2, -1}) == GluingMatrix{1, 0, 2, -1});
}

TEST_CASE("parsing") {
  GluingMatrix m = parse_gluing(read_fixture("gluing/gluing.prototype.slope2.txt"));
  CHECK(m == GluingMatrix{1, 0, 2, -1});
  CHECK(parse_gluing(serialize_gluing(m)) == m);

  Diagnostics diag;
  parse_gluing("matrix 1 0 2\n", &diag);
  CHECK_FALSE(diag.ok());
  parse_gluing("matrix 1 0 2 -1\nmatrix 1 0 2 -1\n", &diag);
  CHECK_FALSE(diag.ok());
  CHECK_THROWS_AS(parse_gluing("nonsense\n"), ParseError);
  CHECK_THROWS_AS(parse_gluing(""), ParseError);
}
