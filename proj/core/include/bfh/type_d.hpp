// Type D structures presented as decorated graphs: vertices are generators
// carrying an idempotent, directed edges carry a chord (or the idempotent
// coefficient, written e) and encode delta^1.  Coefficients are F2
// throughout; parallel identical edges cancel in pairs at parse time.
#pragma once

#include "bfh/torus_algebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bfh {

struct DEdge {
  std::string source;
  std::string target;
  std::optional<Alg> label;  // nullopt encodes an empty (idempotent) edge

  bool operator==(const DEdge& o) const = default;
  bool operator<(const DEdge& o) const {
    return std::tie(source, target, label) <
           std::tie(o.source, o.target, o.label);
  }
};

struct TypeDStructure {
  std::vector<std::pair<std::string, Alg>> generators;  // (name, I0 or I1)
  std::vector<DEdge> edges;
  std::optional<std::string> spinc_tag;

  // Idempotent of a named generator; throws MathError if unknown.
  Alg idempotent_of(const std::string& name) const;
  bool has_generator(const std::string& name) const;
};

struct Diagnostics {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
};

// Reports idempotent-typing violations and d^2 != 0 witnesses (length-two
// paths whose algebra product survives with odd multiplicity).
Diagnostics validate(const TypeDStructure& d);

// True iff the decorated graph has no directed cycle, so iterated delta maps
// vanish and box tensor sums are finite.
bool is_bounded(const TypeDStructure& d);

// Cancels empty edges by zig-zag composition until none remain; the result is
// homotopy equivalent to the input.  Cancellation order: lexicographically
// smallest (source, target) first, for determinism.
TypeDStructure edge_reduce(TypeDStructure d);

struct GradedTypeD {
  TypeDStructure structure;
  std::string base_generator;
  std::map<std::string, GradingElement> gradings;
  // Generator h of the grading-set quotient G/<h>; absent when every cycle
  // closes exactly (trivial subgroup).
  std::optional<GradingElement> indeterminacy;
};

// Propagates gradings from base (assigned (0;0,0)) along a depth-first
// spanning tree (i0 neighbors before i1, names lexicographic within each
// idempotent), using the edge relation
// lambda^{-1} gr(x) = gr(rhoI) gr(y).  The indeterminacy is the canonical
// generator of the subgroup of cycle-closure discrepancies; when the caller
// supplies the expected number of spin^c classes, proper divisors of the
// closure element consistent with that count are preferred.
GradedTypeD assign_gradings(const TypeDStructure& d, const std::string& base,
                            std::optional<int> expected_spinc_classes =
                                std::nullopt);

// True iff the GradedTypeD edge relation holds for every edge modulo <h>.
bool graded_relation_holds(const GradedTypeD& g);

// One term of delta^k: the edge labels along a length-k walk (empty edges
// recorded as their idempotent) and the endpoint.
struct DeltaTerm {
  std::vector<Alg> labels;
  std::string target;

  bool operator==(const DeltaTerm& o) const = default;
  bool operator<(const DeltaTerm& o) const {
    return std::tie(labels, target) < std::tie(o.labels, o.target);
  }
};

// All length-k walks from x with F2 multiplicity (duplicate terms cancel in
// pairs).  k = 0 yields the identity singleton.
std::vector<DeltaTerm> delta_k(const TypeDStructure& d, const std::string& x,
                               int k);

// Text format: one declaration per line:
//   generator <name> <i0|i1>
//   edge <src> <dst> <r1|r2|r3|r12|r23|r123|e>
//   spinc <tag>
// '#' starts a comment.  Parallel identical edges cancel with a warning.
TypeDStructure parse_type_d(const std::string& text,
                            Diagnostics* diag = nullptr);
std::string serialize_type_d(const TypeDStructure& d);

// DOT export mirroring the decorated-graph figures: filled vertices for i0,
// open vertices for i1.
std::string type_d_to_dot(const TypeDStructure& d);

// Decorated-graph isomorphism (idempotent- and label-preserving bijection).
bool type_d_isomorphic(const TypeDStructure& a, const TypeDStructure& b);

}  // namespace bfh
