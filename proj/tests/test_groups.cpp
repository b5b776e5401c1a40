#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "dk/families.hpp"
#include "dk/group.hpp"
#include "dk/hopf.hpp"

namespace {

using namespace dk;

Word random_word(std::mt19937& rng, const std::vector<std::string>& gens, int len) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
  std::uniform_int_distribution<int> expo(-2, 2);
  Word w;
  for (int i = 0; i < len; ++i) {
    int e = expo(rng);
    if (e == 0) e = 1;
    w.factors.push_back({gens[static_cast<size_t>(pick(rng))], Rat(e)});
  }
  return w;
}

}  // namespace

TEST_CASE("word parse and print") {
  Word w = Word::parse("x^2 y^-1 x^1/2 y");
  REQUIRE(w.factors.size() == 4);
  CHECK(w.factors[0] == std::pair<std::string, Rat>{"x", Rat(2)});
  CHECK(w.factors[1] == std::pair<std::string, Rat>{"y", Rat(-1)});
  CHECK(w.factors[2] == std::pair<std::string, Rat>{"x", Rat(1, 2)});
  CHECK(w.factors[3] == std::pair<std::string, Rat>{"y", Rat(1)});
  CHECK(Word::parse(w.str()).str() == w.str());
  CHECK(Word::parse("").factors.empty());
  CHECK_THROWS_AS(Word::parse("x^"), std::invalid_argument);
}

TEST_CASE("free evaluation is group-like and multiplicative") {
  AlphabetPtr f2 = Family::free_on({"x", "y"}).alphabet();
  std::mt19937 rng(9001);
  for (int round = 0; round < 4; ++round) {
    Word w1 = random_word(rng, {"x", "y"}, 3);
    Word w2 = random_word(rng, {"x", "y"}, 3);
    Series a = eval_free(w1, f2, 4);
    CHECK(is_grouplike(a));
    Word cat = w1;
    cat.factors.insert(cat.factors.end(), w2.factors.begin(), w2.factors.end());
    CHECK(eval_free(cat, f2, 4) == a * eval_free(w2, f2, 4));
  }
  // Cancellation happens in the completion, not the word.
  CHECK(eval_free(Word::parse("x y y^-1 x^-1"), f2, 4) == Series::one(f2, 4));
}

TEST_CASE("product model of the three-strand pure braid group") {
  int D = 4;
  // The three products equal each other and the central element.
  ProductEl p1 = eval_pb3(Word::parse("x13 x23 x12"), D);
  ProductEl p2 = eval_pb3(Word::parse("x23 x12 x13"), D);
  ProductEl p3 = eval_pb3(Word::parse("x12 x13 x23"), D);
  CHECK(p1 == p2);
  CHECK(p2 == p3);
  CHECK(p3.g == Series::one(p3.g.alphabet(), D));
  CHECK(p3.z == Rat(1));

  // The full twist is central.
  for (const std::string& gen : {"x12", "x13", "x23"}) {
    ProductEl g = eval_pb3(Word::parse(gen), D);
    CHECK(p3.mul(g) == g.mul(p3));
  }

  // Inverses and powers.
  ProductEl x13 = eval_pb3(Word::parse("x13"), D);
  CHECK(x13.mul(x13.inv()) == f2z_identity(D));
  CHECK(x13.pow(Rat(2)) == x13.mul(x13));
  ProductEl half = x13.pow(Rat(1, 2));
  CHECK(half.mul(half) == x13);
  CHECK(x13.pow(Rat(-1)) == x13.inv());
}

TEST_CASE("central coordinate splits off") {
  int D = 3;
  ProductEl a = eval_f2z(Word::parse("x z^2 y^-1"), D);
  ProductEl b = eval_f2z(Word::parse("z^-2 x"), D);
  CHECK(a.z == Rat(2));
  CHECK(b.z == Rat(-2));
  CHECK(a.mul(b).z == Rat(0));
  AlphabetPtr f2 = Family::free_on({"x", "y"}).alphabet();
  Series x = Series::gen(f2, D, "x"), y = Series::gen(f2, D, "y");
  CHECK(a.g == exp_series(x) * exp_series(y.scaled(Rat(-1))));
}

TEST_CASE("semidirect model: section and kernel letters") {
  int N = 3, D = 4;
  AlphabetPtr ka = rel_alphabet(N);
  CHECK(ka->size() == N + 1);

  SemiEl x = eval_relf2(Word::parse("x"), N, D);
  CHECK(x.res == 1);
  SemiEl xN = eval_relf2(Word::parse("x^3"), N, D);
  CHECK(xN.res == 0);
  CHECK(xN.u == exp_series(Series::gen(ka, D, "X")));

  // x^a y x^-a lands on the a-th kernel letter.
  for (int a = 0; a < N; ++a) {
    Word w;
    w.factors = {{"x", Rat(a)}, {"y", Rat(1)}, {"x", Rat(-a)}};
    SemiEl e = eval_relf2(w, N, D);
    CHECK(e.res == 0);
    CHECK(e.u == exp_series(Series::gen(ka, D, "Y" + std::to_string(a))));
  }
}

TEST_CASE("semidirect model: twist automorphism") {
  int N = 3, D = 4;
  AlphabetPtr ka = rel_alphabet(N);
  Series X = Series::gen(ka, D, "X");
  Series Y0 = Series::gen(ka, D, "Y0");
  Series Y2 = Series::gen(ka, D, "Y2");

  // One step moves each kernel letter up, conjugated by the fractional X
  // power that balances the section x = X^{1/N}.
  Series down = exp_series(X.scaled(Rat(-1, 3)));
  CHECK(rel_twist(1, Y0, N) == down * Series::gen(ka, D, "Y1") * inverse(down));
  Series up = exp_series(X.scaled(Rat(2, 3)));
  CHECK(rel_twist(1, Y2, N) == up * Y0 * inverse(up));
  CHECK(rel_twist(1, X, N) == X);

  // The twist has order N: the residue stores only a mod N, the X letter
  // carries the wrap.
  Series s = Y0 * Y2 + X.scaled(Rat(1, 5));
  CHECK(rel_twist(N, s, N) == s);
  CHECK(rel_twist(1, rel_twist(1, rel_twist(1, s, N), N), N) == s);
  CHECK(rel_twist(-1, s, N) == rel_twist(2, s, N));
  CHECK(rel_twist(1, rel_twist(2, s, N), N) == s);
  CHECK(rel_twist(0, s, N) == s);
}

TEST_CASE("semidirect model: multiplication is a homomorphism") {
  int N = 2, D = 4;
  std::mt19937 rng(9002);
  for (int round = 0; round < 6; ++round) {
    Word w1 = random_word(rng, {"x", "y"}, 4);
    Word w2 = random_word(rng, {"x", "y"}, 4);
    SemiEl a = eval_relf2(w1, N, D);
    SemiEl b = eval_relf2(w2, N, D);
    Word cat = w1;
    cat.factors.insert(cat.factors.end(), w2.factors.begin(), w2.factors.end());
    CHECK(eval_relf2(cat, N, D) == a.mul(b));
    CHECK(a.res == word_residue(w1, N));
    CHECK(a.mul(a.inv()) == rel_identity(N, D));
    CHECK(a.inv().mul(a) == rel_identity(N, D));
  }
}

TEST_CASE("semidirect model: powers") {
  int N = 2, D = 4;
  SemiEl x = eval_relf2(Word::parse("x"), N, D);
  CHECK(x.pow_int(2) == eval_relf2(Word::parse("x^2"), N, D));
  CHECK(x.pow_int(-3) == eval_relf2(Word::parse("x^-3"), N, D));
  CHECK(x.pow_int(0) == rel_identity(N, D));

  SemiEl g = eval_relf2(Word::parse("x y x^-1 y x^2"), N, D);
  CHECK(g.res == 0);
  SemiEl h = g.pow(Rat(1, 2));
  CHECK(h.mul(h) == g);
  CHECK(g.pow(Rat(-1)) == g.inv());
  SemiEl odd = eval_relf2(Word::parse("x y"), N, D);
  CHECK(odd.res == 1);
  CHECK_THROWS_AS(odd.pow(Rat(1, 2)), std::invalid_argument);

  CHECK(word_residue(Word::parse("x^5 y^7 x^-2"), 2) == 1);
  CHECK_THROWS_AS(word_residue(Word::parse("x^1/2"), 2), std::invalid_argument);
}
