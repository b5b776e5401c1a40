#include "dk/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace dk {

namespace {
bool is_lyndon(const std::vector<std::uint16_t>& w) {
  for (size_t i = 1; i < w.size(); ++i) {
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<long>(i), w.end()))
      return false;
  }
  return !w.empty();
}
}  // namespace

std::vector<std::vector<std::uint16_t>> lyndon_words(const AlphabetPtr& alph, int d) {
  std::vector<std::vector<std::uint16_t>> out;
  int k = alph->size();
  int n = d / alph->min_weight();
  if (n == 0) return out;
  auto weight_of = [&](const std::vector<std::uint16_t>& w) {
    int t = 0;
    for (std::uint16_t i : w) t += alph->weight(i);
    return t;
  };
  // Duval's generation of Lyndon words of length <= n in lex order.
  std::vector<std::uint16_t> t{0};
  while (!t.empty()) {
    if (weight_of(t) == d) out.push_back(t);
    size_t m = t.size();
    while (t.size() < static_cast<size_t>(n)) t.push_back(t[t.size() % m]);
    while (!t.empty() && t.back() == k - 1) t.pop_back();
    if (!t.empty()) ++t.back();
  }
  return out;
}

Series lyndon_bracket(const AlphabetPtr& alph, int maxdeg,
                      const std::vector<std::uint16_t>& word) {
  if (word.empty()) throw std::invalid_argument("empty word");
  if (word.size() == 1) return Series::gen(alph, maxdeg, word[0]);
  if (!is_lyndon(word)) throw std::invalid_argument("not a Lyndon word");
  // Longest proper Lyndon suffix.
  for (size_t i = 1; i < word.size(); ++i) {
    std::vector<std::uint16_t> v(word.begin() + static_cast<long>(i), word.end());
    if (is_lyndon(v)) {
      std::vector<std::uint16_t> u(word.begin(), word.begin() + static_cast<long>(i));
      return bracket(lyndon_bracket(alph, maxdeg, u), lyndon_bracket(alph, maxdeg, v));
    }
  }
  throw std::logic_error("Lyndon word without Lyndon suffix");
}

std::vector<Series> lyndon_basis(const AlphabetPtr& alph, int maxdeg, int d) {
  std::vector<Series> out;
  for (const auto& w : lyndon_words(alph, d)) out.push_back(lyndon_bracket(alph, maxdeg, w));
  return out;
}

}  // namespace dk
