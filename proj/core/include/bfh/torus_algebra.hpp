// The eight-dimensional torus algebra over F2: idempotents i0, i1 and chords
// r1, r2, r3 generating r12, r23, r123, with relations r2*r1 = r3*r2 = 0.
// Zero is an explicit ninth element so multiplication is total.
#pragma once

#include "bfh/grading.hpp"

#include <array>
#include <string>
#include <vector>

namespace bfh {

enum class Alg : unsigned char {
  Zero,
  I0,
  I1,
  R1,
  R2,
  R3,
  R12,
  R23,
  R123,
};

// All nine elements, zero included (useful for exhaustive table checks).
inline constexpr std::array<Alg, 9> kAlgebraElements = {
    Alg::Zero, Alg::I0, Alg::I1,  Alg::R1,  Alg::R2,
    Alg::R3,   Alg::R12, Alg::R23, Alg::R123};

inline constexpr std::array<Alg, 6> kChordElements = {
    Alg::R1, Alg::R2, Alg::R3, Alg::R12, Alg::R23, Alg::R123};

bool is_idempotent(Alg a);
bool is_chord(Alg a);

// Quiver endpoints: r1: i0 -> i1, r2: i1 -> i0, r3: i0 -> i1, and the induced
// endpoints for composites.  Zero has no endpoints (throws MathError).
Alg left_idempotent(Alg a);
Alg right_idempotent(Alg a);

// Quiver-path concatenation; zero absorbs, idempotents act as units on
// compatible sides; exactly r1*r2, r2*r3, r1*r23, r12*r3 are the nonzero
// chord products.
Alg algebra_multiply(Alg a, Alg b);

// Refined grading: gr(r1)=(-1/2;1/2,-1/2), gr(r2)=(-1/2;1/2,1/2),
// gr(r3)=(-1/2;-1/2,1/2); idempotents are the identity; composite chords
// multiply their factors.  Throws MathError("ZeroHasNoGrading") on zero.
GradingElement grading_of(Alg a);

// ASCII names used by the decorated-graph file format: "i0", "i1", "r1", ...
std::string algebra_name(Alg a);
Alg parse_algebra(std::string_view name);

// An ordered list of chords, as fed to an A-infinity operation m_{k+1}.
// Constructors reject sequences that are not quiver-composable (the right
// idempotent of each chord must equal the left idempotent of the next).
struct ChordSequence {
  std::vector<Alg> chords;

  ChordSequence() = default;
  explicit ChordSequence(std::vector<Alg> cs);

  bool operator==(const ChordSequence& o) const = default;
  std::size_t size() const { return chords.size(); }
};

}  // namespace bfh
