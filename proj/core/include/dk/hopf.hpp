#pragma once

#include <functional>
#include <map>
#include <vector>

#include "dk/series.hpp"

namespace dk {

// Element of the tensor square, truncated at total weight maxdeg (the weight
// of m1 (x) m2 is weight(m1) + weight(m2)).
class TensorSeries {
 public:
  TensorSeries() = default;
  TensorSeries(AlphabetPtr alph, int maxdeg);

  const AlphabetPtr& alphabet() const { return alph_; }
  int maxdeg() const { return maxdeg_; }
  const std::map<std::pair<Monomial, Monomial>, Rat>& terms() const { return terms_; }

  void add_term(const Monomial& a, const Monomial& b, const Rat& c);
  bool operator==(const TensorSeries& o) const;
  TensorSeries operator-(const TensorSeries& o) const;
  bool is_zero() const { return terms_.empty(); }

 private:
  AlphabetPtr alph_;
  int maxdeg_ = 0;
  std::map<std::pair<Monomial, Monomial>, Rat> terms_;
};

// Coproduct for which every generator is primitive, extended multiplicatively:
// a word maps to the sum over all ways to split its letters into a left and a
// right subword (shuffle-split), each side keeping its original order.
TensorSeries coproduct(const Series& s);

// x (x) y and y (x) x images of a pair of series, for building tensor-side
// expressions to compare against coproduct output.
TensorSeries tensor_of(const Series& left, const Series& right);

bool is_grouplike(const Series& s);
bool is_primitive(const Series& s);

// exp of a series with zero constant term.
Series exp_series(const Series& a);
// log of a series with constant term 1:
// log(g) = sum_{n>=1} (-1)^{n+1} (g-1)^n / n.
Series log_series(const Series& g);
// log(exp(a) exp(b)).
Series bch(const Series& a, const Series& b);
// Multiplicative inverse of a series with nonzero constant term.
Series inverse(const Series& g);
// g^s := exp(s log g) for g with constant term 1 and any rational s.
Series power(const Series& g, const Rat& s);

// Algebra morphism determined by letter images: each letter of s.alphabet()
// maps to images[letter] (a series over the common target alphabet). Images
// need not be weight-homogeneous; truncation happens in the target.
Series substitute(const Series& s, const std::vector<Series>& images);

// Conjugate u g u^{-1} (u invertible).
Series conjugate(const Series& u, const Series& g);

// Lie bracket ab - ba.
Series bracket(const Series& a, const Series& b);

}  // namespace dk
