#pragma once

#include <vector>

#include "dk/hopf.hpp"
#include "dk/series.hpp"

namespace dk {

// Lyndon words (strictly smaller than every proper suffix) of the given total
// weight, in lexicographic order on letter indices.
std::vector<std::vector<std::uint16_t>> lyndon_words(const AlphabetPtr& alph, int d);

// Right-standard bracketing of a Lyndon word, as a series: letters for length
// one, else [b(u), b(v)] where v is the longest proper Lyndon suffix.
Series lyndon_bracket(const AlphabetPtr& alph, int maxdeg,
                      const std::vector<std::uint16_t>& word);

// Basis of the weight-d part of the free Lie algebra, as series.
std::vector<Series> lyndon_basis(const AlphabetPtr& alph, int maxdeg, int d);

}  // namespace dk
