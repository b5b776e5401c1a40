#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "dk/families.hpp"
#include "dk/fin_map.hpp"
#include "dk/hopf.hpp"
#include "dk/operadic.hpp"
#include "dk/quotient.hpp"

namespace {

using namespace dk;

Series gen(const Family& fam, int maxdeg, const std::string& name) {
  return gen_series(fam.alphabet(), maxdeg, name);
}

// A fixed not-too-symmetric element of the family's algebra.
Series sample(const Family& fam, int maxdeg) {
  AlphabetPtr alph = fam.alphabet();
  Series s = Series::one(alph, maxdeg);
  int k = alph->size();
  for (int i = 0; i < k; ++i) {
    Series g = Series::gen(alph, maxdeg, i);
    s += g.scaled(Rat(i + 1, 3));
    s += (g * Series::gen(alph, maxdeg, (i + 1) % k)).scaled(Rat(1, i + 2));
  }
  return s;
}

// Composite relabeling of sigma o_p tau on n+m-1 strands.
std::vector<int> block_perm(const std::vector<int>& sigma, int p,
                            const std::vector<int>& tau, int n, int m) {
  std::vector<int> out(static_cast<size_t>(n + m - 1));
  int sp = sigma[static_cast<size_t>(p - 1)];
  for (int h = 1; h <= n; ++h) {
    if (h == p) continue;
    int s = h < p ? h : h + m - 1;
    int v = sigma[static_cast<size_t>(h - 1)];
    out[static_cast<size_t>(s - 1)] = v + (v > sp ? m - 1 : 0);
  }
  for (int i = 1; i <= m; ++i)
    out[static_cast<size_t>(p + i - 2)] = sp + tau[static_cast<size_t>(i - 1)] - 1;
  return out;
}

}  // namespace

TEST_CASE("pmap parse, print, compose") {
  PMap f = PMap::parse("pmap(3<-6: 1,3|2|5)");
  CHECK(f.m == 6);
  CHECK(f.n == 3);
  CHECK(f.preimage(1) == std::vector<int>{1, 3});
  CHECK(f.preimage(2) == std::vector<int>{2});
  CHECK(f.preimage(3) == std::vector<int>{5});
  CHECK_FALSE(f.hits_zero());
  CHECK(PMap::parse(f.str()).img == f.img);

  PMap e = PMap::parse("pmap(2<-3: \xE2\x88\x85|1,2)");
  CHECK(e.preimage(1).empty());
  CHECK(e.preimage(2) == std::vector<int>{1, 2});

  PMap z = PMap::parse("pmap(1<-3: 2; 1)");
  CHECK(z.preimage(0) == std::vector<int>{2});
  CHECK(z.img == std::vector<int>{1, 0, -1});
  CHECK(PMap::parse(z.str()).img == z.img);

  CHECK_THROWS_AS(PMap::parse("pmap(2<-2: 1|1)"), std::invalid_argument);
  CHECK_THROWS_AS(PMap::parse("pmap(2<-2: 3|)"), std::invalid_argument);
  CHECK_THROWS_AS(PMap::parse("pmap(2<-2: 1)"), std::invalid_argument);

  PMap g = PMap::parse("pmap(2<-3: 1,2|3)");
  PMap fg = compose_pmap(PMap::parse("pmap(3<-4: 1|2,3|)"), g);
  CHECK(fg.m == 4);
  CHECK(fg.n == 2);
  CHECK(fg.img == std::vector<int>{1, 1, 1, -1});
}

TEST_CASE("structural index maps") {
  CHECK(contraction_map(2, 1, 2).img == std::vector<int>{1, 1, 2});
  CHECK(contraction_map(2, 2, 2).img == std::vector<int>{1, 2, 2});
  CHECK(slot_map(2, 1, 2).img == std::vector<int>{1, 2, -1});
  CHECK(slot_map(2, 2, 2).img == std::vector<int>{-1, 1, 2});
  CHECK(stack_host_map(1, 1).img == std::vector<int>{0, 1});
  CHECK(stack_guest_map(1, 1).img == std::vector<int>{1, -1});
}

TEST_CASE("insertion of generators") {
  // Preimages {1,3}, {2}, {5} inside six strands.
  PMap f = PMap::parse("pmap(3<-6: 1,3|2|5)");
  Family t3 = Family::t(3), t6 = Family::t(6);
  Series t12 = gen(t3, 2, "t[1,2]");
  CHECK(insert_along(f, t12, t6) ==
        gen(t6, 2, "t[1,2]") + gen(t6, 2, "t[2,3]"));
  Series t13 = gen(t3, 2, "t[1,3]");
  CHECK(insert_along(f, t13, t6) ==
        gen(t6, 2, "t[1,5]") + gen(t6, 2, "t[3,5]"));
  // Strands 4 and 6 are dropped, so nothing involving them appears.
  Series t23 = gen(t3, 2, "t[2,3]");
  CHECK(insert_along(f, t23, t6) == gen(t6, 2, "t[2,5]"));

  // Collapsing strands 1,2 and dropping none kills mixed letters.
  PMap c = PMap::parse("pmap(3<-2: 1||2)");
  Family t2 = Family::t(2);
  Series csum = t12 + t13 + t23;
  CHECK(insert_along(c, csum, t2) == gen(t2, 2, "t[1,2]"));

  // Cyclotomic stacking image of the distinguished-strand letter.
  Family g12 = Family::tGamma(1, 2), g22 = Family::tGamma(2, 2);
  Series k1 = gen(g12, 2, "k[1]");
  Series want = gen(g22, 2, "k[2]") + gen(g22, 2, "t[1,2;0]") + gen(g22, 2, "t[1,2;1]");
  CHECK(insert_along(stack_host_map(1, 1), k1, g22) == want);
}

TEST_CASE("insertion is functorial") {
  Family t2 = Family::t(2), t3 = Family::t(3), t4 = Family::t(4);
  PMap g = PMap::parse("pmap(2<-3: 1,3|2)");
  PMap f = PMap::parse("pmap(3<-4: 2|1,4|3)");
  PMap h = compose_pmap(f, g);
  for (const std::string& name : {"t[1,2]"}) {
    Series s = gen(t2, 3, name);
    CHECK(insert_along(h, s, t4) == insert_along(f, insert_along(g, s, t3), t4));
  }
  Series s = sample(t2, 3);
  CHECK(insert_along(h, s, t4) == insert_along(f, insert_along(g, s, t3), t4));

  Family g22 = Family::tGamma(2, 2), g32 = Family::tGamma(3, 2);
  PMap fz = PMap::parse("pmap(2<-3: 3; 1|2)");
  PMap gz = PMap::parse("pmap(2<-2: 1|2)");
  PMap hz = compose_pmap(fz, gz);
  Series sg = sample(g22, 3);
  CHECK(insert_along(hz, sg, g32) == insert_along(fz, insert_along(gz, sg, g22), g32));
}

TEST_CASE("operad units") {
  Family t1 = Family::t(1), t3 = Family::t(3);
  Series one = Series::one(t1.alphabet(), 3);
  Series host = sample(t3, 3);
  QuotientPtr q = shared_table(t3.presentation(), 3);
  for (int p = 1; p <= 3; ++p) {
    CHECK(operad_compose(p, host, one) == q->reduce(host));
  }
  Series guest = sample(t3, 3);
  CHECK(operad_compose(1, one, guest) == q->reduce(guest));
}

TEST_CASE("operad associativity") {
  Family t2 = Family::t(2);
  Series a = sample(t2, 3), b = sample(t2, 3), c = sample(t2, 3);
  // Nested slots: (a o_1 b) o_q' c with q' = 1 + q - 1.
  for (int q = 1; q <= 2; ++q) {
    CHECK(operad_compose(q, operad_compose(1, a, b), c) ==
          operad_compose(1, a, operad_compose(q, b, c)));
  }
  // Disjoint slots on a three-strand host.
  Family t3 = Family::t(3);
  Series h = sample(t3, 3);
  CHECK(operad_compose(3, operad_compose(1, h, b), c) ==
        operad_compose(1, operad_compose(2, h, c), b));
}

TEST_CASE("operad equivariance") {
  Family t2 = Family::t(2), t3 = Family::t(3);
  QuotientPtr q = shared_table(t3.presentation(), 3);
  Series a = sample(t2, 3), b = sample(t2, 3);
  std::vector<int> sigma = {2, 1}, tau = {2, 1};
  for (int p = 1; p <= 2; ++p) {
    Series lhs = operad_compose(sigma[static_cast<size_t>(p - 1)],
                                t2.sym_act(sigma, a), t2.sym_act(tau, b));
    Series rhs = t3.sym_act(block_perm(sigma, p, tau, 2, 2),
                            operad_compose(p, a, b));
    CHECK(q->equal_mod(lhs, rhs));
  }
}

TEST_CASE("two-pointed stacking and module structure") {
  Family g12 = Family::tGamma(1, 2);
  Family t2 = Family::t(2);
  Series A = sample(g12, 3), B = sample(g12, 3), C = sample(g12, 3);
  Series c = sample(t2, 3);

  // Stacking is associative.
  CHECK(monoid_compose_gamma(monoid_compose_gamma(A, B), C) ==
        monoid_compose_gamma(A, monoid_compose_gamma(B, C)));

  // Inserting into the guest before or after stacking agrees.
  CHECK(monoid_compose_gamma(A, module_compose_gamma(1, B, c)) ==
        module_compose_gamma(1, monoid_compose_gamma(A, B), c));

  // Inserting into the host before or after stacking agrees (host strands
  // sit above the guest's, so slot 1 of A becomes slot 2 of the stack).
  CHECK(monoid_compose_gamma(module_compose_gamma(1, A, c), B) ==
        module_compose_gamma(2, monoid_compose_gamma(A, B), c));

  // Module slot maps compose like the operad slots.
  Family g22 = Family::tGamma(2, 2);
  Series H = sample(g22, 3);
  Series b2 = sample(t2, 3);
  for (int qslot = 1; qslot <= 2; ++qslot) {
    CHECK(module_compose_gamma(qslot, module_compose_gamma(1, H, b2), c) ==
          module_compose_gamma(1, H, operad_compose(qslot, b2, c)));
  }
  CHECK(module_compose_gamma(3, module_compose_gamma(1, H, b2), c) ==
        module_compose_gamma(1, module_compose_gamma(2, H, c), b2));

  // Unit guest.
  Series one = Series::one(Family::t(1).alphabet(), 3);
  QuotientPtr qg = shared_table(g22.presentation(), 3);
  CHECK(module_compose_gamma(1, H, one) == qg->reduce(H));
}

TEST_CASE("label-twist equivariance of stacking and modules") {
  Family g12 = Family::tGamma(1, 2), g22 = Family::tGamma(2, 2);
  Family g32 = Family::tGamma(3, 2);
  Family t2 = Family::t(2);
  QuotientPtr q2 = shared_table(g22.presentation(), 3);
  QuotientPtr q3 = shared_table(g32.presentation(), 3);

  Series A = sample(g12, 3), B = sample(g12, 3);
  // Guest coordinates come first in the stacked tuple.
  Series lhs = monoid_compose_gamma(g12.gamma_act({1}, A), g12.gamma_act({0}, B));
  Series rhs = g22.gamma_act({0, 1}, monoid_compose_gamma(A, B));
  CHECK(q2->equal_mod(lhs, rhs));

  // Module insertion repeats the twist of the replaced strand over the block.
  Series H = sample(g22, 3);
  Series c = sample(t2, 3);
  Series ml = module_compose_gamma(1, g22.gamma_act({1, 0}, H), c);
  Series mr = g32.gamma_act({1, 1, 0}, module_compose_gamma(1, H, c));
  CHECK(q3->equal_mod(ml, mr));
}

TEST_CASE("elliptic module structure") {
  Family ell2 = Family::tell(2), bar2 = Family::tellbar(2);
  Family t2 = Family::t(2);
  Series c = sample(t2, 3), d = sample(t2, 3);
  Series one = Series::one(Family::t(1).alphabet(), 3);

  for (const Family& fam : {ell2, bar2}) {
    Series H = sample(fam, 3);
    QuotientPtr q = shared_table(fam.presentation(), 3);
    for (int p = 1; p <= 2; ++p) {
      CHECK(module_compose_ell(p, H, one) == q->reduce(H));
    }
    for (int qslot = 1; qslot <= 2; ++qslot) {
      CHECK(module_compose_ell(qslot, module_compose_ell(1, H, c), d) ==
            module_compose_ell(1, H, operad_compose(qslot, c, d)));
    }
    CHECK(module_compose_ell(3, module_compose_ell(1, H, c), d) ==
          module_compose_ell(1, module_compose_ell(2, H, d), c));
  }
}

TEST_CASE("reduced and full elliptic presentations translate") {
  Family bar2 = Family::tellbar(2), ell2 = Family::tell(2);
  Series s = sample(bar2, 3);
  CHECK(tell_to_tellbar(tellbar_to_tell(s)) == s);

  QuotientPtr qbar = shared_table(bar2.presentation(), 4);
  for (const Series& r : ell2.relations()) {
    CHECK(qbar->reduce(tell_to_tellbar(r)).is_zero());
  }

  CHECK_THROWS_AS(tellbar_to_tell(sample(ell2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(tell_to_tellbar(sample(bar2, 2)), std::invalid_argument);
}

TEST_CASE("incompatible compositions are rejected") {
  Family t2 = Family::t(2);
  Series a = sample(t2, 3);
  Series b = sample(t2, 2);
  CHECK_THROWS_AS(operad_compose(1, a, b), std::invalid_argument);  // maxdeg mismatch
  CHECK_THROWS_AS(operad_compose(1, a, sample(Family::tGamma(2, 2), 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(monoid_compose_gamma(sample(Family::tGamma(1, 2), 3),
                                       sample(Family::tGamma(1, 3), 3)),
                  std::invalid_argument);
}
