#include <cstdlib>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "dk/families.hpp"
#include "dk/hopf.hpp"
#include "dk/quotient.hpp"

namespace {

using namespace dk;

Series gen(const QuotientTable& q, const std::string& name) {
  return gen_series(q.alphabet(), q.maxdeg(), name);
}

}  // namespace

TEST_CASE("three-strand table: dimensions and ideal ranks") {
  QuotientTable q(Family::t(3).presentation(), 4);
  // dim U = 2^{d+1} - 1 in each degree for three strands.
  long long want[] = {1, 3, 7, 15, 31};
  for (int d = 0; d <= 4; ++d) {
    CHECK(q.dim(d) == want[d]);
    CHECK(q.dim(d) + q.rank(d) == [&] {
      // free-algebra dimension on 3 letters
      long long f = 1;
      for (int i = 0; i < d; ++i) f *= 3;
      return f;
    }());
  }
  CHECK(q.rank(2) == 2);
}

TEST_CASE("three-strand table: defining relations reduce to zero") {
  QuotientTable q(Family::t(3).presentation(), 4);
  Series t12 = gen(q, "t[1,2]"), t13 = gen(q, "t[1,3]"), t23 = gen(q, "t[2,3]");
  CHECK(q.reduce(bracket(t12, t13 + t23)).is_zero());
  CHECK(q.reduce(bracket(t13, t12 + t23)).is_zero());
  CHECK(q.reduce(bracket(t23, t12 + t13)).is_zero());
  Series c = t12 + t13 + t23;
  for (const Series& g : {t12, t13, t23}) {
    CHECK(q.reduce(bracket(c, g)).is_zero());
  }
}

TEST_CASE("reduce is idempotent and linear") {
  QuotientTable q(Family::t(3).presentation(), 4);
  Series t12 = gen(q, "t[1,2]"), t13 = gen(q, "t[1,3]"), t23 = gen(q, "t[2,3]");
  Series s = t12 * t13 * t23 + t23 * t12 - t13 * t13 + Series::one(q.alphabet(), 4);
  Series r = q.reduce(s);
  CHECK(q.reduce(r) == r);
  Series u = t13 * t23 - t12;
  CHECK(q.reduce(s + u.scaled(Rat(2, 3))) == q.reduce(s) + q.reduce(u).scaled(Rat(2, 3)));
}

TEST_CASE("equal_mod and first_failure") {
  QuotientTable q(Family::t(3).presentation(), 4);
  Series t12 = gen(q, "t[1,2]"), t13 = gen(q, "t[1,3]"), t23 = gen(q, "t[2,3]");
  CHECK(q.equal_mod(t12 * t13 + t12 * t23, t12 * (t13 + t23)));
  CHECK(q.equal_mod(t12 * (t13 + t23), (t13 + t23) * t12));

  auto f0 = q.first_failure(t12, t12);
  CHECK(f0.degree == -1);
  CHECK(f0.residual.is_zero());

  // Differ first in degree 2: t13*t12 is not t12*t13 mod the ideal.
  Series a = t12 + t12 * t13;
  Series b = t12 + t13 * t12;
  CHECK_FALSE(q.equal_mod(a, b));
  auto f = q.first_failure(a, b);
  CHECK(f.degree == 2);
  CHECK_FALSE(f.residual.is_zero());
  CHECK(f.residual.min_weight() == 2);
}

TEST_CASE("two strands: one generator, no relations") {
  QuotientTable q(Family::t(2).presentation(), 5);
  for (int d = 0; d <= 5; ++d) {
    CHECK(q.dim(d) == 1);
    CHECK(q.rank(d) == 0);
  }
  Series t12 = gen(q, "t[1,2]");
  CHECK(q.reduce(t12 * t12) == t12 * t12);
}

TEST_CASE("monomial cap refusal") {
  CHECK_THROWS_AS(QuotientTable(Family::t(3).presentation(), 4, 5),
                  std::runtime_error);
}

TEST_CASE("cache round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "dkquot-test-cache";
  fs::remove_all(dir);
  fs::create_directories(dir);

  Presentation pres = Family::tGamma(2, 2).presentation();
  QuotientTable fresh(pres, 3, kDefaultMonomialCap, dir.string());
  bool wrote = false;
  for (const auto& e : fs::directory_iterator(dir)) {
    (void)e;
    wrote = true;
  }
  CHECK(wrote);

  QuotientTable loaded(pres, 3, kDefaultMonomialCap, dir.string());
  for (int d = 0; d <= 3; ++d) {
    CHECK(loaded.dim(d) == fresh.dim(d));
    CHECK(loaded.rank(d) == fresh.rank(d));
  }
  Series k1 = gen_series(pres.alph, 3, "k[1]");
  Series t0 = gen_series(pres.alph, 3, "t[1,2;0]");
  Series t1 = gen_series(pres.alph, 3, "t[1,2;1]");
  Series s = k1 * t0 + t1 * k1 - t0 * t1;
  CHECK(loaded.reduce(s) == fresh.reduce(s));
  fs::remove_all(dir);
}

TEST_CASE("shared_table memoizes and upgrades maxdeg") {
  Presentation pres = Family::t(3).presentation();
  QuotientPtr a = shared_table(pres, 2);
  QuotientPtr b = shared_table(pres, 4);
  CHECK(b->maxdeg() >= 4);
  QuotientPtr c = shared_table(pres, 3);
  CHECK(c == b);  // the deeper table serves shallower requests
  CHECK(a->dim(2) == c->dim(2));
}
