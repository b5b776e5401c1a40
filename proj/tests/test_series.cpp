#include <random>

#include "dk/hopf.hpp"
#include "dk/io.hpp"
#include "dk/lyndon.hpp"
#include "doctest.h"

using namespace dk;

namespace {

AlphabetPtr f2() { return phi_alphabet(); }

Series random_series(std::mt19937& rng, const AlphabetPtr& alph, int maxdeg,
                     int terms, bool unit_constant = false) {
  std::uniform_int_distribution<int> letter(0, alph->size() - 1);
  std::uniform_int_distribution<int> len(unit_constant ? 1 : 0, maxdeg);
  std::uniform_int_distribution<int> num(-4, 4);
  Series s = unit_constant ? Series::one(alph, maxdeg) : Series::zero(alph, maxdeg);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::uint16_t> idx;
    int l = len(rng);
    for (int i = 0; i < l; ++i) idx.push_back(static_cast<std::uint16_t>(letter(rng)));
    int c = num(rng);
    if (c == 0) c = 1;
    s.add_term(mono_of(alph, idx), Rat(c, 3));
  }
  return s;
}

}  // namespace

TEST_CASE("monomial order is weight first, then letter indices") {
  AlphabetPtr alph = f2();
  Monomial one = mono_of(alph, {});
  Monomial x = mono_of(alph, {0});
  Monomial y = mono_of(alph, {1});
  Monomial xx = mono_of(alph, {0, 0});
  Monomial xy = mono_of(alph, {0, 1});
  Monomial yx = mono_of(alph, {1, 0});
  CHECK(one < x);
  CHECK(x < y);
  CHECK(y < xx);
  CHECK(xx < xy);
  CHECK(xy < yx);

  Family tell2 = Family::tell(2);
  AlphabetPtr e = tell2.alphabet();
  // t[1,2] has weight 2, so it sorts after every product of two weight-1
  // letters would only if lex said so; weight decides first.
  Monomial a = mono_of(e, {static_cast<std::uint16_t>(e->index_checked("a[1]"))});
  Monomial t = mono_of(e, {static_cast<std::uint16_t>(e->index_checked("t[1,2]"))});
  CHECK(a < t);
  CHECK(t.weight == 2);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(7001);
  AlphabetPtr alph = f2();
  for (int round = 0; round < 8; ++round) {
    Series a = random_series(rng, alph, 4, 6);
    Series b = random_series(rng, alph, 4, 6);
    Series c = random_series(rng, alph, 4, 6);
    CHECK((a + b) - b == a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * Series::one(alph, 4) == a);
  }
}

TEST_CASE("truncation drops high terms and cannot be raised") {
  AlphabetPtr alph = f2();
  Series x = Series::gen(alph, 3, "x");
  Series p = x * x * x * x;  // degree 4 vanishes at maxdeg 3
  CHECK(p.is_zero());
  Series t = (Series::one(alph, 3) + x).truncated(2);
  CHECK(t.maxdeg() == 2);
  CHECK_THROWS_AS((void)t.truncated(3), std::invalid_argument);
}

TEST_CASE("alphabet mismatch is rejected") {
  Series a = Series::one(f2(), 3);
  Series b = Series::one(Family::t(3).alphabet(), 3);
  CHECK_THROWS_AS((void)(a + b), std::invalid_argument);
  Series c = Series::one(f2(), 2);
  CHECK_THROWS_AS((void)(a * c), std::invalid_argument);
}

TEST_CASE("bracket expansion: [x,[x,y]] = xxy - 2xyx + yxx") {
  AlphabetPtr alph = f2();
  Series x = Series::gen(alph, 3, "x");
  Series y = Series::gen(alph, 3, "y");
  Series got = bracket(x, bracket(x, y));
  Series want = Series::zero(alph, 3);
  want.add_term(mono_of(alph, {0, 0, 1}), 1);
  want.add_term(mono_of(alph, {0, 1, 0}), -2);
  want.add_term(mono_of(alph, {1, 0, 0}), 1);
  CHECK(got == want);
}

TEST_CASE("coproduct of a word sums over subword splits") {
  AlphabetPtr alph = f2();
  Series x = Series::gen(alph, 2, "x");
  Series y = Series::gen(alph, 2, "y");
  Series xy = x * y;
  TensorSeries diff = coproduct(xy) - tensor_of(Series::one(alph, 2), xy) -
                      tensor_of(xy, Series::one(alph, 2)) - tensor_of(x, y) -
                      tensor_of(y, x);
  CHECK(diff.is_zero());
}

TEST_CASE("exp and log invert each other") {
  std::mt19937 rng(7002);
  AlphabetPtr alph = f2();
  for (int round = 0; round < 4; ++round) {
    Series s = random_series(rng, alph, 4, 5);
    s = s - s.homogeneous_part(0);  // constant 0
    Series g = exp_series(s);
    CHECK(g.constant_term() == 1);
    CHECK(log_series(g) == s);
    Series h = random_series(rng, alph, 4, 5, true);
    CHECK(exp_series(log_series(h)) == h);
  }
}

TEST_CASE("bch low degrees") {
  AlphabetPtr alph = f2();
  Series x = Series::gen(alph, 3, "x");
  Series y = Series::gen(alph, 3, "y");
  Series z = bch(x, y);
  CHECK(z.homogeneous_part(1) == x + y);
  CHECK(z.homogeneous_part(2) == bracket(x, y).scaled(Rat(1, 2)));
  Series deg3 = bracket(x, bracket(x, y)).scaled(Rat(1, 12)) +
                bracket(y, bracket(y, x)).scaled(Rat(1, 12));
  CHECK(z.homogeneous_part(3) == deg3);
  CHECK(bch(x, -x).is_zero());
  CHECK(exp_series(bch(x, y)) == exp_series(x) * exp_series(y));
}

TEST_CASE("group-like and primitive predicates") {
  AlphabetPtr alph = f2();
  Series x = Series::gen(alph, 3, "x");
  Series y = Series::gen(alph, 3, "y");
  CHECK(is_primitive(x));
  CHECK(is_primitive(bracket(x, y)));
  CHECK(is_grouplike(exp_series(x + y)));
  CHECK(is_grouplike(exp_series(bracket(x, y))));
  Series notg = Series::one(alph, 3) + x * y;
  CHECK(!is_grouplike(notg));
  CHECK(!is_primitive(x * y));
}

TEST_CASE("inverse and rational powers") {
  std::mt19937 rng(7003);
  AlphabetPtr alph = f2();
  Series g = random_series(rng, alph, 4, 5, true);
  CHECK(g * inverse(g) == Series::one(alph, 4));
  CHECK(inverse(g) * g == Series::one(alph, 4));
  CHECK(power(g, 2) == g * g);
  Series r = power(g, Rat(1, 2));
  CHECK(r * r == g);
  CHECK(power(g, Rat(-1)) == inverse(g));
  CHECK(power(g, 0) == Series::one(alph, 4));
}

TEST_CASE("substitution is an algebra morphism") {
  std::mt19937 rng(7004);
  AlphabetPtr alph = f2();
  // Weight-nondecreasing images: a morphism on the nose. (Images with a
  // constant term would see words the truncation of a*b already dropped.)
  Series u = random_series(rng, alph, 4, 4);
  Series v = random_series(rng, alph, 4, 4);
  u = u - u.homogeneous_part(0);
  v = v - v.homogeneous_part(0);
  Series a = random_series(rng, alph, 4, 5);
  Series b = random_series(rng, alph, 4, 5);
  std::vector<Series> images{u, v};
  CHECK(substitute(a * b, images) == substitute(a, images) * substitute(b, images));
  CHECK(substitute(a + b, images) == substitute(a, images) + substitute(b, images));
  // Images may drop weight (e.g. constant term 1); truncation happens in the
  // target.
  Series g = Series::one(alph, 2) + Series::gen(alph, 2, "x");
  Series w = Series::gen(alph, 2, "x") * Series::gen(alph, 2, "y");
  Series got = substitute(w, {g, g});
  CHECK(got == g * g);
}

TEST_CASE("substitute composes with exp") {
  AlphabetPtr alph = f2();
  Series x = Series::gen(alph, 4, "x");
  Series y = Series::gen(alph, 4, "y");
  Series s = bracket(x, y) + x.scaled(Rat(1, 2));
  std::vector<Series> images{y + bracket(y, x), x.scaled(2)};
  CHECK(substitute(exp_series(s), images) == exp_series(substitute(s, images)));
}

TEST_CASE("conjugation and bracket helpers") {
  std::mt19937 rng(7005);
  AlphabetPtr alph = f2();
  Series g = random_series(rng, alph, 4, 4, true);
  Series s = random_series(rng, alph, 4, 4);
  CHECK(conjugate(g, s) == g * s * inverse(g));
  Series x = Series::gen(alph, 4, "x");
  Series y = Series::gen(alph, 4, "y");
  CHECK(bracket(x, y) == x * y - y * x);
}

TEST_CASE("lyndon words and basis") {
  AlphabetPtr alph = f2();
  // Rank-2 Lyndon word counts per degree: 2, 1, 2, 3.
  CHECK(lyndon_words(alph, 1).size() == 2);
  CHECK(lyndon_words(alph, 2).size() == 1);
  CHECK(lyndon_words(alph, 3).size() == 2);
  CHECK(lyndon_words(alph, 4).size() == 3);
  for (const auto& w : lyndon_words(alph, 4)) {
    Series b = lyndon_bracket(alph, 4, w);
    CHECK(is_primitive(b));
    CHECK(b.min_weight() == 4);
  }
  // Weighted alphabets count by weight, not length.
  AlphabetPtr e = Family::tell(2).alphabet();  // a,a,b,b weight 1; t weight 2
  for (const auto& w : lyndon_words(e, 3)) {
    int wt = 0;
    for (auto i : w) wt += e->weight(i);
    CHECK(wt == 3);
  }
}
