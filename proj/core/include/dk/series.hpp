#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dk/alphabet.hpp"
#include "dk/rational.hpp"

namespace dk {

// Word in the generators, stored as letter indices with its total weight
// cached. The empty word is the unit.
struct Monomial {
  int weight = 0;
  std::vector<std::uint16_t> idx;

  bool operator==(const Monomial& o) const { return weight == o.weight && idx == o.idx; }
};

// Degree first, then lexicographic in the alphabet's declared generator order.
inline bool operator<(const Monomial& a, const Monomial& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  return a.idx < b.idx;
}

Monomial mono_concat(const Monomial& a, const Monomial& b);
Monomial mono_of(const AlphabetPtr& alph, const std::vector<std::uint16_t>& idx);

// Truncated series with exact rational coefficients: an element of the free
// associative algebra on the alphabet modulo words of weight > maxdeg.
// Invariant: the term map never holds zero coefficients or words of weight
// > maxdeg, so equality of representations is equality of values.
class Series {
 public:
  Series() = default;
  Series(AlphabetPtr alph, int maxdeg);

  static Series zero(const AlphabetPtr& alph, int maxdeg);
  static Series one(const AlphabetPtr& alph, int maxdeg);
  static Series gen(const AlphabetPtr& alph, int maxdeg, int letter);
  static Series gen(const AlphabetPtr& alph, int maxdeg, const std::string& name);

  const AlphabetPtr& alphabet() const { return alph_; }
  int maxdeg() const { return maxdeg_; }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Monomial& m) const;
  Rat constant_term() const;
  // Smallest weight with a nonzero term; maxdeg+1 when zero.
  int min_weight() const;
  size_t support_size() const { return terms_.size(); }

  // Adds c * m; keeps the canonical-form invariant. Words above maxdeg are
  // dropped (that is the truncation, not an error).
  void add_term(const Monomial& m, const Rat& c);

  Series operator-() const;
  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  bool operator==(const Series& o) const;
  bool operator!=(const Series& o) const { return !(*this == o); }

  Series scaled(const Rat& c) const;
  Series homogeneous_part(int d) const;
  // Lowers the truncation order; D must be <= maxdeg().
  Series truncated(int D) const;

  // Throws std::invalid_argument unless alphabets and truncation orders match.
  void check_compatible(const Series& o) const;

 private:
  AlphabetPtr alph_;
  int maxdeg_ = 0;
  std::map<Monomial, Rat> terms_;
};

// Number of words of each weight 0..maxdeg (free algebra dimensions).
std::vector<long long> word_counts(const AlphabetPtr& alph, int maxdeg);

// All words of exactly weight d, in monomial order.
std::vector<Monomial> words_of_weight(const AlphabetPtr& alph, int d);

}  // namespace dk
