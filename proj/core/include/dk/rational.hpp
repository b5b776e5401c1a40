#pragma once

#include <gmpxx.h>

#include <string>

namespace dk {

// Exact rational scalar. All coefficient arithmetic in the library is exact;
// nothing is ever rounded.
using Rat = mpq_class;

// Parses "p" or "p/q" with optional leading '-'. Throws std::invalid_argument
// on malformed input or q == 0. The result is canonicalized (gcd 1, q > 0).
Rat rat_parse(const std::string& text);

// Prints in canonical form: "p" when the denominator is 1, else "p/q" with
// q > 0 and the sign on p.
std::string rat_str(const Rat& q);

inline Rat rat_of(long n) { return Rat(n); }
inline Rat rat_of(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace dk
