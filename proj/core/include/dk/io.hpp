#pragma once

#include <string>
#include <vector>

#include "dk/assoc.hpp"
#include "dk/gt.hpp"

namespace dk {

// Line-oriented textual formats. All writers emit canonical form (terms in
// monomial order, one per line) so serialize -> parse -> serialize is the
// identity byte for byte.

// Resolves a family key (free(...), t(n), tGamma(n,N), tell(n), tellbar(n))
// to its interned alphabet.
AlphabetPtr alphabet_for_key(const std::string& key);

// alphabet <key> / maxdeg <D> / one "<rational> <dot-joined-word|1>" line per
// term.
std::string series_str(const Series& s);
Series parse_series(const std::string& text);

// candidate drinfeld|cyclotomic(N)|elliptic, lambda line, then phi:/psi:/
// aplus:/aminus: blocks as required by the kind.
std::string candidate_str(const Candidate& c);
Candidate parse_candidate(const std::string& text);

// Tagged union for the three group-element flavors, as stored on disk:
// element gt|gtgamma(N)|gtell, mu line, then f:/g:/gplus:/gminus: blocks.
struct GtAny {
  enum class Kind { Gt, GtGamma, GtEll };
  Kind kind = Kind::Gt;
  GtElement gt;
  GtGammaElement gamma;
  GtEllElement ell;
};

GtAny gt_any(const GtElement& e);
GtAny gt_any(const GtGammaElement& e);
GtAny gt_any(const GtEllElement& e);

std::string gt_str(const GtAny& e);
GtAny parse_gt(const std::string& text);

// perm(2,1,3) -> {2,1,3}; gamma(1,0) -> {1,0}.
std::vector<int> parse_perm(const std::string& text);
std::vector<int> parse_gamma(const std::string& text);

// Whole-file helpers; throw std::runtime_error on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace dk
