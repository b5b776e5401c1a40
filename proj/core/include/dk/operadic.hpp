#pragma once

#include "dk/families.hpp"
#include "dk/fin_map.hpp"
#include "dk/quotient.hpp"

namespace dk {

// Options threaded through every reduction the operadic layer performs.
struct ReduceOptions {
  long long monomial_cap = kDefaultMonomialCap;
  std::string cache_dir;
};

// Family of a series, recovered from its alphabet key.
Family family_of(const Series& s);

// Pullback of s along the index map f. s lives over the family with f.n
// strands; the result lives over out_fam (f.m strands). Supported shapes:
// t->t, t->tGamma (f maps 0 to *), tGamma->tGamma (same N), t->tell/tellbar,
// tell->tell, tellbar->tellbar. The result is not reduced.
Series insert_along(const PMap& f, const Series& s, const Family& out_fam);

// Partial composition of the strand families. Host and guest must share the
// truncation order; results are reduced to canonical form in the target.
// t(n) o_p t(m) -> t(n+m-1).
Series operad_compose(int p, const Series& host, const Series& guest,
                      const ReduceOptions& opt = {});
// tGamma(n,N) o_p t(m) -> tGamma(n+m-1,N), p in 1..n.
Series module_compose_gamma(int p, const Series& host, const Series& guest,
                            const ReduceOptions& opt = {});
// tGamma(n,N) o_0 tGamma(m,N) -> tGamma(n+m,N): the guest keeps strand labels
// 1..m, the host's shift up by m.
Series monoid_compose_gamma(const Series& host, const Series& guest,
                            const ReduceOptions& opt = {});
// tell/tellbar(n) o_p t(m) -> same kind with n+m-1 strands.
Series module_compose_ell(int p, const Series& host, const Series& guest,
                          const ReduceOptions& opt = {});

// Reinterpret a tellbar series as a tell series over the same strand count
// (letters keep their names), and project back by eliminating the last a/b
// letters through the zero-sum constraints.
Series tellbar_to_tell(const Series& s);
Series tell_to_tellbar(const Series& s);

}  // namespace dk
