#include <stdexcept>
#include <string>

#include "doctest.h"
#include "dk/assoc.hpp"
#include "dk/families.hpp"
#include "dk/group.hpp"
#include "dk/gt.hpp"
#include "dk/hopf.hpp"
#include "dk/io.hpp"

namespace {

using namespace dk;

}  // namespace

TEST_CASE("alphabet lookup by key") {
  CHECK(alphabet_for_key("t(3)")->size() == 3);
  CHECK(alphabet_for_key("tGamma(2,3)")->size() == 5);
  CHECK(alphabet_for_key("free(x,y)")->index_checked("y") == 1);
  CHECK(alphabet_for_key("tellbar(2)")->size() == 3);
  CHECK_THROWS_AS(alphabet_for_key("gadget(7)"), std::invalid_argument);
}

TEST_CASE("series round trip is byte-identical") {
  AlphabetPtr f2 = phi_alphabet();
  Series x = Series::gen(f2, 3, "x"), y = Series::gen(f2, 3, "y");
  Series s = Series::one(f2, 3) + bracket(x, y).scaled(Rat(-5, 12)) + x * y * x;
  std::string text = series_str(s);
  Series back = parse_series(text);
  CHECK(back == s);
  CHECK(series_str(back) == text);

  // Constant-only and zero series survive too.
  Series z = Series::zero(Family::tell(2).alphabet(), 2);
  CHECK(parse_series(series_str(z)) == z);
  Series c = Series::one(Family::t(3).alphabet(), 4).scaled(Rat(7, 3));
  CHECK(parse_series(series_str(c)) == c);
  CHECK(series_str(c).find("7/3 1\n") != std::string::npos);
}

TEST_CASE("series parse rejections") {
  CHECK_THROWS(parse_series("alphabet t(2)\n"));                      // missing maxdeg
  CHECK_THROWS(parse_series("maxdeg 2\nalphabet t(2)\n"));            // wrong order
  CHECK_THROWS(parse_series("alphabet t(2)\nmaxdeg 2\n1 q[1,2]\n"));  // unknown letter
  CHECK_THROWS(parse_series("alphabet t(2)\nmaxdeg 1\n1 t[1,2].t[1,2]\n"));  // too deep
  CHECK_THROWS(parse_series("alphabet nope(1)\nmaxdeg 2\n"));
}

TEST_CASE("candidate round trips") {
  Candidate d = solve_drinfeld(Rat(1), 3).candidate;
  std::string text = candidate_str(d);
  Candidate back = parse_candidate(text);
  CHECK(back.kind == Candidate::Kind::Drinfeld);
  CHECK(back.lambda == d.lambda);
  CHECK(back.phi == d.phi);
  CHECK(candidate_str(back) == text);

  Candidate cy = trivial_cyclotomic(2, 2);
  cy.lambda = Rat(-3, 7);
  std::string ct = candidate_str(cy);
  Candidate cb = parse_candidate(ct);
  CHECK(cb.kind == Candidate::Kind::Cyclotomic);
  CHECK(cb.N == 2);
  CHECK(cb.lambda == Rat(-3, 7));
  CHECK(cb.psi == cy.psi);
  CHECK(candidate_str(cb) == ct);

  Candidate el = trivial_elliptic(2);
  std::string et = candidate_str(el);
  Candidate eb = parse_candidate(et);
  CHECK(eb.kind == Candidate::Kind::Elliptic);
  CHECK(eb.aplus == el.aplus);
  CHECK(eb.aminus == el.aminus);
  CHECK(candidate_str(eb) == et);
}

TEST_CASE("candidate parse rejections") {
  Candidate d = trivial_drinfeld(2);
  std::string good = candidate_str(d);
  CHECK_THROWS(parse_candidate("candid drinfeld\n"));
  CHECK_THROWS(parse_candidate(good + "trailing\n"));
  // phi must live over the two-letter alphabet.
  CHECK_THROWS(parse_candidate(
      "candidate drinfeld\nlambda 0\nphi:\nalphabet t(3)\nmaxdeg 2\n1 1\n"));
  // cyclotomic needs a psi block.
  CHECK_THROWS(parse_candidate(
      "candidate cyclotomic(2)\nlambda 0\nphi:\nalphabet free(x,y)\nmaxdeg 2\n1 1\n"));
}

TEST_CASE("group element round trips") {
  int D = 3;
  AlphabetPtr f2 = phi_alphabet();
  Series x = Series::gen(f2, D, "x"), y = Series::gen(f2, D, "y");
  GtElement g{Rat(5, 2), exp_series(bracket(x, y))};
  std::string gt = gt_str(gt_any(g));
  GtAny back = parse_gt(gt);
  REQUIRE(back.kind == GtAny::Kind::Gt);
  CHECK(back.gt.mu == g.mu);
  CHECK(back.gt.f == g.f);
  CHECK(gt_str(back) == gt);

  GtGammaElement gg = gtgamma_identity(3, D);
  gg.mu = Rat(-2);
  gg.g = exp_series(Series::gen(rel_alphabet(3), D, "Y1"));
  std::string gs = gt_str(gt_any(gg));
  GtAny gback = parse_gt(gs);
  REQUIRE(gback.kind == GtAny::Kind::GtGamma);
  CHECK(gback.gamma.N == 3);
  CHECK(gback.gamma.mu == gg.mu);
  CHECK(gback.gamma.g == gg.g);
  CHECK(gt_str(gback) == gs);

  GtEllElement ge = gtell_identity(D);
  std::string es = gt_str(gt_any(ge));
  GtAny eback = parse_gt(es);
  REQUIRE(eback.kind == GtAny::Kind::GtEll);
  CHECK(eback.ell.gplus == ge.gplus);
  CHECK(eback.ell.gminus == ge.gminus);
  CHECK(gt_str(eback) == es);

  CHECK_THROWS(parse_gt("element widget\nmu 1\n"));
  CHECK_THROWS(parse_gt(gt + "junk\n"));
}

TEST_CASE("permutation and twist tuples") {
  CHECK(parse_perm("perm(2,1,3)") == std::vector<int>{2, 1, 3});
  CHECK(parse_gamma("gamma(1,0)") == std::vector<int>{1, 0});
  CHECK(parse_gamma("gamma(0)") == std::vector<int>{0});
  CHECK_THROWS(parse_perm("perm()"));
  CHECK_THROWS(parse_perm("cycle(1,2)"));
  CHECK_THROWS(parse_gamma("gamma(1,x)"));
}

TEST_CASE("file helpers") {
  std::string path = "io_test_scratch.txt";
  write_file(path, "hello\n");
  CHECK(read_file(path) == "hello\n");
  CHECK_THROWS_AS(read_file("definitely/not/here.txt"), std::runtime_error);
}
