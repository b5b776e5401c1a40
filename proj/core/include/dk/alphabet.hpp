#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace dk {

// One noncommutative generator. weight >= 1 so every homogeneous component of
// a series is finite-dimensional.
struct Letter {
  std::string name;
  int weight = 1;
};

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

// Immutable ordered generator list. The declared order is the tie-break order
// used by the monomial order, so it is part of the identity of the alphabet.
// Alphabets are interned by key: two series are compatible iff their alphabet
// keys are equal.
class Alphabet {
 public:
  // Interned constructor. Re-requesting an existing key checks that the
  // letters agree and returns the cached instance; a mismatch throws.
  static AlphabetPtr make(const std::string& key, std::vector<Letter> letters);

  const std::string& key() const { return key_; }
  int size() const { return static_cast<int>(letters_.size()); }
  const Letter& letter(int i) const { return letters_[static_cast<size_t>(i)]; }
  int weight(int i) const { return letters_[static_cast<size_t>(i)].weight; }
  const std::string& name(int i) const { return letters_[static_cast<size_t>(i)].name; }

  // Index of a generator name, -1 if absent.
  int index(const std::string& name) const;
  // Same, but throws with the alphabet key in the message.
  int index_checked(const std::string& name) const;

  // Smallest generator weight; >= 1 by construction.
  int min_weight() const { return min_weight_; }

 private:
  Alphabet(std::string key, std::vector<Letter> letters);
  std::string key_;
  std::vector<Letter> letters_;
  std::vector<std::pair<std::string, int>> by_name_;  // sorted
  int min_weight_ = 1;
};

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && a->key() == b->key());
}

}  // namespace dk
