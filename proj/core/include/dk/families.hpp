#pragma once

#include <string>
#include <vector>

#include "dk/quotient.hpp"
#include "dk/series.hpp"

namespace dk {

// Canonical generator spellings. Pair generators are stored with i < j; the
// flip identifications t[j,i] = t[i,j] and t[j,i;a] = t[i,j;(N-a) mod N] are
// applied at naming time, never as ideal relations.
std::string tname(int i, int j);
std::string kname(int i);
std::string tgname(int i, int j, int a, int N);
std::string aname(int i);
std::string bname(int i);

// One of the presented families: free(<names>), t(n), tGamma(n,N), tell(n),
// tellbar(n).
struct Family {
  enum class Kind { Free, T, TGamma, Tell, Tellbar };

  Kind kind = Kind::Free;
  int n = 0;                       // strand count (all kinds but Free)
  int N = 1;                       // label order (TGamma)
  std::vector<std::string> names;  // Free letters, in declared order

  static Family free_on(std::vector<std::string> names);
  static Family t(int n);
  static Family tGamma(int n, int N);
  static Family tell(int n);
  static Family tellbar(int n);

  // Parses the canonical descriptor, e.g. "t(3)", "tGamma(2,3)", "free(x,y)".
  static Family parse(const std::string& text);

  std::string key() const;
  AlphabetPtr alphabet() const;
  // Defining relations, each homogeneous, over alphabet(). Enumeration follows
  // the presentations literally; redundant instances are kept (row reduction
  // removes them).
  std::vector<Series> relations() const;
  Presentation presentation() const;

  // Relabeling action of a permutation of {1..n} (1-based images). Extends
  // the generator relabeling as an algebra morphism.
  Series sym_act(const std::vector<int>& perm, const Series& s) const;
  // Label-twist action of a tuple in (Z/N)^n on a TGamma series:
  // t[j,k;a] picks up +gamma_j - gamma_k on its label; k[i] is fixed.
  Series gamma_act(const std::vector<int>& gamma, const Series& s) const;
};

// Letter as a series, by canonical name.
Series gen_series(const AlphabetPtr& alph, int maxdeg, const std::string& name);

}  // namespace dk
