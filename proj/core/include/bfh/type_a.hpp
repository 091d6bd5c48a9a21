// Type A structures: finitely many A-infinity operations m_{k+1} stored
// explicitly.  For loop-type decorated graphs the whole operation set is
// produced from the type D side by the digit-swap/regroup conversion.
#pragma once

#include "bfh/type_d.hpp"

#include <map>
#include <string>
#include <vector>

namespace bfh {

// One operation m_{k+1}(input, rho_{I1}, ..., rho_{Ik}) = output, k >= 1.
struct AOperation {
  std::string input;
  ChordSequence chords;
  std::string output;

  bool operator==(const AOperation& o) const = default;
  bool operator<(const AOperation& o) const {
    return std::tie(input, chords.chords, output) <
           std::tie(o.input, o.chords.chords, o.output);
  }
};

struct TypeAStructure {
  std::vector<std::pair<std::string, Alg>> generators;  // (name, I0 or I1)
  std::vector<AOperation> operations;

  Alg idempotent_of(const std::string& name) const;
  bool has_generator(const std::string& name) const;
};

// Idempotent typing of every operation: the input idempotent must match the
// left idempotent of the first chord, adjacent chords must compose through
// the quiver, and the output idempotent must match the right end.
Diagnostics validate_type_a(const TypeAStructure& a);

// Conversion from a reduced loop-type decorated graph (every generator of
// valence <= 2): enumerate directed paths that repeat no directed edge,
// swap digits 1 <-> 3 in each edge label, concatenate, and regroup the
// digit string into the minimum number of algebra basis chords.  Strings
// with no valid regrouping contribute nothing; a string whose minimum-k
// regrouping is not unique is rejected with a diagnostic rather than
// guessed at.  Throws MathError("NotLoopType") when a generator has valence
// > 2 or the graph still has empty edges (edge_reduce first).
TypeAStructure from_type_d(const TypeDStructure& d,
                           Diagnostics* diag = nullptr);

struct GradedTypeA {
  TypeAStructure structure;
  std::string base_generator;
  std::map<std::string, GradingElement> gradings;
  // Generator f of the left-quotient <f>\G; absent when every operation
  // closes exactly.
  std::optional<GradingElement> indeterminacy;
};

// Propagates gradings from base (assigned (0;0,0)) along a depth-first
// spanning tree of the operation graph (i0 neighbors before i1, names
// lexicographic within each idempotent), using the relation
//   gr(m_{k+1}(x, rho...)) = lambda^{k-1} gr(x) gr(rho_{I1}) ... gr(rho_{Ik}).
// Throws MathError("DisconnectedGraph") when the operation graph does not
// reach every generator.
GradedTypeA assign_gradings_a(const TypeAStructure& a, const std::string& base);

// True iff the grading relation holds for every stored operation modulo the
// left action of <f>.
bool graded_relation_holds_a(const GradedTypeA& g);

// Text format: same generator lines as the type D format, plus
//   op <input> [<chord>...] <output>
// with chords written r1, r2, r3, r12, r23, r123.
TypeAStructure parse_type_a(const std::string& text,
                            Diagnostics* diag = nullptr);
std::string serialize_type_a(const TypeAStructure& a);

}  // namespace bfh
