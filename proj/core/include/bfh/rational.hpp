// Exact rational arithmetic used throughout the library.  All invariants
// computed here are small rationals; exact equality is part of the contract,
// so no floating point appears anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bfh {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown on malformed textual input (fixture files, CLI arguments).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an operation's mathematical preconditions fail.
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Integer numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline Integer denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

// True iff r is an integer multiple of 1/2 (membership in (1/2)Z).
inline bool is_half_integer(const Rational& r) {
  return denominator(r) <= 2;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Canonical form: lowest terms, "a" when the denominator is 1, else "a/b".
std::string to_string(const Rational& r);

// Parses "a" or "a/b" (optionally signed).  Throws ParseError on anything
// else; round-trips to_string exactly.
Rational parse_rational(std::string_view text);

}  // namespace bfh
