#include "doctest.h"

#include "bfh/type_a.hpp"

#include <fstream>
#include <set>
#include <sstream>

using namespace bfh;
using enum Alg;

namespace {

std::string read_fixture(const std::string& rel) {
  std::ifstream in(std::string(BFH_FIXTURES_DIR) + "/" + rel);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TypeDStructure load_d(const std::string& rel) {
  Diagnostics diag;
  TypeDStructure d = parse_type_d(read_fixture(rel), &diag);
  REQUIRE(diag.ok());
  return d;
}

AOperation op(const std::string& in, std::vector<Alg> cs,
              const std::string& out) {
  return {in, ChordSequence(std::move(cs)), out};
}

}  // namespace

TEST_CASE("trefoil conversion yields the full eleven-operation set") {
  TypeAStructure a = from_type_d(load_d("type_d/cfd.trefoil.mu-lambda.txt"));
  CHECK(validate_type_a(a).ok());
  std::set<AOperation> ops(a.operations.begin(), a.operations.end());
  std::set<AOperation> expected = {
      // The five published operations.
      op("x1", {R3, R2, R1}, "y1"),
      op("x3", {R3}, "y1"),
      op("x3", {R123}, "y2"),
      op("y3", {R2, R1}, "y2"),
      op("x1", {R1}, "y3"),
      // The remaining contributions of the same decorated graph.
      op("x3", {R1}, "y4"),
      op("x3", {R12}, "x2"),
      op("y4", {R2}, "x2"),
      op("y4", {R23}, "y2"),
      op("x2", {R3}, "y2"),
      op("x1", {R12, R1}, "y2"),
  };
  CHECK(ops == expected);
}

TEST_CASE("single generator converts to no operations") {
  TypeDStructure d;
  d.generators = {{"x", I0}};
  TypeAStructure a = from_type_d(d);
  CHECK(a.generators.size() == 1);
  CHECK(a.operations.empty());
}

TEST_CASE("a lone 23-labeled edge regroups as the sequence 2,1") {
  TypeDStructure d;
  d.generators = {{"y3", I1}, {"y2", I1}};
  d.edges = {{"y3", "y2", R23}};
  TypeAStructure a = from_type_d(d);
  REQUIRE(a.operations.size() == 1);
  CHECK(a.operations[0] == op("y3", {R2, R1}, "y2"));
}

TEST_CASE("valence-3 graphs and unreduced graphs are rejected") {
  TypeDStructure d;
  d.generators = {{"x", I0}, {"y", I1}, {"z", I1}, {"w", I1}};
  d.edges = {{"x", "y", R1}, {"x", "z", R3}, {"x", "w", R123}};
  CHECK_THROWS_AS(from_type_d(d), MathError);

  TypeDStructure e;
  e.generators = {{"a", I0}, {"b", I0}};
  e.edges = {{"a", "b", std::nullopt}};
  CHECK_THROWS_AS(from_type_d(e), MathError);
}

TEST_CASE("trefoil gradings match the published table") {
  TypeAStructure a = from_type_d(load_d("type_d/cfd.trefoil.mu-lambda.txt"));
  GradedTypeA g = assign_gradings_a(a, "x1");
  CHECK(g.gradings.at("x1") == grading_identity());
  CHECK(g.gradings.at("x2") == parse_grading("(-1;2,0)"));
  CHECK(g.gradings.at("x3") == parse_grading("(-1/2;1,0)"));
  CHECK(g.gradings.at("y1") == parse_grading("(-1/2;1/2,1/2)"));
  CHECK(g.gradings.at("y2") == parse_grading("(-1/2;3/2,1/2)"));
  CHECK(g.gradings.at("y3") == parse_grading("(1/2;1/2,1/2)"));
  CHECK(g.gradings.at("y4") == parse_grading("(-3/2;3/2,-1/2)"));
  REQUIRE(g.indeterminacy.has_value());
  CHECK(*g.indeterminacy == parse_grading("(3/2;0,1)"));
  CHECK(graded_relation_holds_a(g));
}

TEST_CASE("closure arithmetic behind f") {
  // gr(y3) read backwards through m2(x1, rho1) = y3 differs from the
  // propagated gr(x1) = (0;0,0) by exactly f.
  GradedTypeA g = assign_gradings_a(
      from_type_d(load_d("type_d/cfd.trefoil.mu-lambda.txt")), "x1");
  GradingElement implied_x1 =
      multiply(g.gradings.at("y3"), inverse(grading_of(R1)));
  CHECK(implied_x1 == parse_grading("(3/2;0,1)"));
}

TEST_CASE("single-generator grading is trivial") {
  TypeAStructure a;
  a.generators = {{"x", I0}};
  GradedTypeA g = assign_gradings_a(a, "x");
  CHECK(g.gradings.at("x") == grading_identity());
  CHECK_FALSE(g.indeterminacy.has_value());
  CHECK(graded_relation_holds_a(g));
}

TEST_CASE("m2 count equals single-digit edge count after relabeling") {
  // Single-chord m2 operations arise exactly from edges whose swapped label
  // is one digit (r1, r2, r3), one per edge.
  for (const char* f :
       {"type_d/cfd.trefoil.mu-lambda.txt", "type_d/cfd.N.s1.untwisted.txt",
        "type_d/cfd.N.s1.twisted-2.txt", "type_d/cfd.N.s0.twisted-2.txt"}) {
    CAPTURE(f);
    TypeDStructure d = load_d(f);
    TypeAStructure a = from_type_d(d);
    int single_digit_edges = 0;
    for (const auto& e : d.edges)
      if (e.label == R1 || e.label == R2 || e.label == R3) ++single_digit_edges;
    int single_chord_m2 = 0;
    for (const auto& o : a.operations)
      if (o.chords.size() == 1 && (o.chords.chords[0] == R1 ||
                                   o.chords.chords[0] == R2 ||
                                   o.chords.chords[0] == R3))
        ++single_chord_m2;
    CHECK(single_chord_m2 == single_digit_edges);
  }
}

TEST_CASE("grading relation holds for all convertible catalog structures") {
  for (const char* f :
       {"type_d/cfd.trefoil.mu-lambda.txt", "type_d/cfd.N.s1.untwisted.txt",
        "type_d/cfd.N.s0.twisted-2.txt", "type_d/cfd.N.s1.twisted-2.txt"}) {
    CAPTURE(f);
    TypeAStructure a = from_type_d(load_d(f));
    GradedTypeA g = assign_gradings_a(a, a.generators.front().first);
    CHECK(graded_relation_holds_a(g));
  }
}

TEST_CASE("parse/serialize round trip") {
  TypeAStructure a = from_type_d(load_d("type_d/cfd.trefoil.mu-lambda.txt"));
  Diagnostics diag;
  TypeAStructure again = parse_type_a(serialize_type_a(a), &diag);
  CHECK(diag.ok());
  CHECK(a.generators == again.generators);
  CHECK(std::set<AOperation>(a.operations.begin(), a.operations.end()) ==
        std::set<AOperation>(again.operations.begin(), again.operations.end()));

  Diagnostics bad;
  parse_type_a("op x y\n", &bad);  // undeclared generators
  CHECK_FALSE(bad.ok());
}

TEST_CASE("golden fixture matches the conversion output") {
  TypeAStructure converted =
      from_type_d(load_d("type_d/cfd.trefoil.mu-lambda.txt"));
  Diagnostics diag;
  TypeAStructure golden = parse_type_a(read_fixture("type_a/cfa.trefoil.txt"),
                                       &diag);
  REQUIRE(diag.ok());
  CHECK(golden.generators == converted.generators);
  CHECK(std::set<AOperation>(golden.operations.begin(),
                             golden.operations.end()) ==
        std::set<AOperation>(converted.operations.begin(),
                             converted.operations.end()));
}
