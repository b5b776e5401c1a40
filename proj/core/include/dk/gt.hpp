#pragma once

#include "dk/assoc.hpp"

namespace dk {

// Which slot population the gtgamma composition uses for the two displayed
// arguments of the outer element. Power: the x-slot image is the mu2-th power
// of the slot letter and the wrap conjugators are composed from the clean
// letter shift plus a fractional power of the x-slot letter (satisfies the
// identity and associativity laws). LiteralRoot: the printed fractional
// exponents are applied to the slot letter directly (kept for inspection;
// fails the right identity law).
enum class GtGammaSlots { Power, LiteralRoot };

struct GtElement {
  Rat mu;
  Series f;  // over free(x,y)
};

struct GtGammaElement {
  Rat mu;
  Series f;  // over free(x,y)
  Series g;  // over free(X,Y0..Y{N-1})
  int N = 1;
};

struct GtEllElement {
  Rat mu;
  Series f;               // over free(x,y)
  Series gplus, gminus;   // over free(A,B)
};

AlphabetPtr gtell_alphabet();  // free(A,B)

GtElement gt_identity(int maxdeg);
GtGammaElement gtgamma_identity(int N, int maxdeg);
GtEllElement gtell_identity(int maxdeg);

GtElement gt_compose(const GtElement& a, const GtElement& b);
GtGammaElement gtgamma_compose(const GtGammaElement& a, const GtGammaElement& b,
                               GtGammaSlots slots = GtGammaSlots::Power);
GtEllElement gtell_compose(const GtEllElement& a, const GtEllElement& b);

// Defining relations of the genus-zero group: duality and the triple product
// with z = (xy)^{-1}, plus group-likeness of f.
CheckReport verify_gt(const GtElement& a);

Candidate gt_act(const GtElement& a, const Candidate& c);
Candidate gtgamma_act(const GtGammaElement& a, const Candidate& c);
Candidate gtell_act(const GtEllElement& a, const Candidate& c);

// f evaluated at a pair of invertible constant-term-1 group elements.
Series group_pair_subst(const Series& f, const Series& first, const Series& second);

}  // namespace dk
