#pragma once

#include <string>
#include <vector>

#include "dk/series.hpp"

namespace dk {

// Basepointed map between finite index sets: source {*, (0,) 1..m}, target
// {*, (0,) 1..n}. The basepoint * always maps to *; the distinguished element
// 0, when both sides carry one, maps to 0. Stored by images of 1..m:
// -1 means *, 0 is legal only for maps used between doubly-pointed families.
struct PMap {
  int m = 0;
  int n = 0;
  std::vector<int> img;  // size m; img[i-1] is the image of i

  // Grammar: pmap(n<-m: B1|...|Bn) where Bj lists the preimage of j,
  // comma-separated, empty allowed; an optional leading "B0;" lists the
  // nonzero preimages of 0. Elements not listed anywhere map to *.
  static PMap parse(const std::string& text);
  std::string str() const;

  std::vector<int> preimage(int j) const;  // j in {0, 1..n}
  bool hits_zero() const;
  void validate() const;  // ranges and disjointness
};

// f: A -> B then g: B -> C. zero_to says where g sends the element 0 of B
// when f produced it: 0 (doubly-pointed g) or -1 (g undefined at 0).
PMap compose_pmap(const PMap& f, const PMap& g, int zero_to = 0);

// Strand contraction c_p: {*,(0,)1..n+m-1} -> {*,(0,)1..n}: identity below p,
// the block p..p+m-1 collapses onto p, the rest shifts down by m-1.
PMap contraction_map(int n, int p, int m);
// Slot extraction iota_p: {*,(0,)1..n+m-1} -> {*,1..m}: the block p..p+m-1
// maps to 1..m in order, everything else (0 included) to *.
PMap slot_map(int n, int p, int m);
// Stacking maps for the doubly-pointed monoid product, target arities n and m,
// source {*,0,1..n+m}: the host collapses 1..m onto 0 and shifts the rest down
// to 1..n; the guest keeps 1..m and drops the rest.
PMap stack_host_map(int n, int m);
PMap stack_guest_map(int n, int m);

}  // namespace dk
