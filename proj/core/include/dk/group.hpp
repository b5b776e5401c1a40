#pragma once

#include <string>
#include <vector>

#include "dk/hopf.hpp"
#include "dk/rational.hpp"
#include "dk/series.hpp"

namespace dk {

// A group word: ordered generator powers with exact rational exponents.
// Integer exponents are ordinary group words; rational ones make sense in the
// prounipotent completions the contexts model.
struct Word {
  std::vector<std::pair<std::string, Rat>> factors;

  // Whitespace-separated tokens "gen^exp" ("gen" alone means exponent 1).
  static Word parse(const std::string& text);
  std::string str() const;
};

// Group-like evaluation in a completed free algebra: each generator name must
// be a letter; gen^e contributes exp(e * letter).
Series eval_free(const Word& w, const AlphabetPtr& alph, int maxdeg);

// Element of (completed free rank-2 group) x (central Z tensor k): the series
// part is group-like over free(x,y), the central coordinate is a scalar
// exponent.
struct ProductEl {
  Series g;
  Rat z;

  ProductEl mul(const ProductEl& o) const;
  ProductEl inv() const;
  ProductEl pow(const Rat& s) const;
  bool operator==(const ProductEl& o) const { return z == o.z && g == o.g; }
};

ProductEl f2z_identity(int maxdeg);
// Context F(2)xZ: generators x, y (free part) and z (central).
ProductEl eval_f2z(const Word& w, int maxdeg);
// Context PB3: generators x12, x13, x23. The model sends x12 and x23 to the
// free generators and x13 to x12^{-1} z x23^{-1} with z the central full
// twist, so x12 x13 x23 = z exactly.
ProductEl eval_pb3(const Word& w, int maxdeg);

// Element of the semidirect model of the rank-2 completion relative to the
// reduction mod N of the x-exponent: a kernel series over
// free(X, Y0..Y{N-1}) together with the residue class. The residue-1 section
// is X^{1/N}, so x^N evaluates to (exp X, 0) and x^a y x^{-a} to (exp Ya, 0).
struct SemiEl {
  Series u;
  int res = 0;
  int N = 1;

  SemiEl mul(const SemiEl& o) const;
  SemiEl inv() const;
  SemiEl pow_int(long e) const;
  // exp(s log) of a residue-0 element; throws otherwise.
  SemiEl pow(const Rat& s) const;
  bool operator==(const SemiEl& o) const {
    return N == o.N && res == o.res && u == o.u;
  }
};

// The kernel alphabet free(X,Y0,...,Y{N-1}).
AlphabetPtr rel_alphabet(int N);
SemiEl rel_identity(int N, int maxdeg);
// The mod-N twist automorphism on kernel series: Yj moves to Y_{(j+a) mod N}
// conjugated by the fractional X power that accounts for the wrap.
Series rel_twist(int a, const Series& u, int N);
// Context relF2(N): generators x, y.
SemiEl eval_relf2(const Word& w, int N, int maxdeg);
// The x-exponent sum mod N (y contributes nothing). Exponents of x must be
// integers.
int word_residue(const Word& w, int N);

}  // namespace dk
