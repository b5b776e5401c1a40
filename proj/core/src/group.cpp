#include "dk/group.hpp"

#include <stdexcept>

namespace dk {

Series eval_free(const Word& w, const AlphabetPtr& alph, int maxdeg) {
  Series g = Series::one(alph, maxdeg);
  for (const auto& [name, e] : w.factors) {
    Series letter = Series::gen(alph, maxdeg, name);
    g = g * exp_series(letter.scaled(e));
  }
  return g;
}

namespace {
AlphabetPtr f2_alphabet() {
  return Alphabet::make("free(x,y)", {{"x", 1}, {"y", 1}});
}
}  // namespace

ProductEl ProductEl::mul(const ProductEl& o) const {
  return ProductEl{g * o.g, z + o.z};
}

ProductEl ProductEl::inv() const { return ProductEl{inverse(g), -z}; }

ProductEl ProductEl::pow(const Rat& s) const { return ProductEl{power(g, s), z * s}; }

ProductEl f2z_identity(int maxdeg) {
  return ProductEl{Series::one(f2_alphabet(), maxdeg), Rat(0)};
}

ProductEl eval_f2z(const Word& w, int maxdeg) {
  AlphabetPtr alph = f2_alphabet();
  ProductEl out = f2z_identity(maxdeg);
  for (const auto& [name, e] : w.factors) {
    ProductEl gen;
    if (name == "x")
      gen = ProductEl{exp_series(Series::gen(alph, maxdeg, "x")), Rat(0)};
    else if (name == "y")
      gen = ProductEl{exp_series(Series::gen(alph, maxdeg, "y")), Rat(0)};
    else if (name == "z")
      gen = ProductEl{Series::one(alph, maxdeg), Rat(1)};
    else
      throw std::invalid_argument("unknown F(2)xZ generator: " + name);
    out = out.mul(gen.pow(e));
  }
  return out;
}

ProductEl eval_pb3(const Word& w, int maxdeg) {
  AlphabetPtr alph = f2_alphabet();
  Series ex = exp_series(Series::gen(alph, maxdeg, "x"));
  Series ey = exp_series(Series::gen(alph, maxdeg, "y"));
  ProductEl out = f2z_identity(maxdeg);
  for (const auto& [name, e] : w.factors) {
    ProductEl gen;
    if (name == "x12")
      gen = ProductEl{ex, Rat(0)};
    else if (name == "x23")
      gen = ProductEl{ey, Rat(0)};
    else if (name == "x13")
      gen = ProductEl{inverse(ex) * inverse(ey), Rat(1)};
    else
      throw std::invalid_argument("unknown PB3 generator: " + name);
    out = out.mul(gen.pow(e));
  }
  return out;
}

AlphabetPtr rel_alphabet(int N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  std::vector<Letter> letters{{"X", 1}};
  for (int a = 0; a < N; ++a) letters.push_back({"Y" + std::to_string(a), 1});
  std::string key = "free(X";
  for (int a = 0; a < N; ++a) key += ",Y" + std::to_string(a);
  key += ")";
  return Alphabet::make(key, std::move(letters));
}

Series rel_twist(int a, const Series& u, int N) {
  AlphabetPtr alph = rel_alphabet(N);
  if (!same_alphabet(u.alphabet(), alph))
    throw std::invalid_argument("series is not over the kernel alphabet");
  int D = u.maxdeg();
  a %= N;
  if (a < 0) a += N;
  if (a == 0) return u;
  Series X = Series::gen(alph, D, "X");
  std::vector<Series> images;
  images.push_back(X);
  for (int j = 0; j < N; ++j) {
    int shifted = j + a;
    int wrap = shifted / N;
    Rat c = Rat(wrap) - rat_of(a, N);
    Series target = Series::gen(alph, D, "Y" + std::to_string(shifted % N));
    if (c == 0) {
      images.push_back(target);
    } else {
      Series conj = exp_series(X.scaled(c));
      images.push_back(conj * target * inverse(conj));
    }
  }
  return substitute(u, images);
}

SemiEl SemiEl::mul(const SemiEl& o) const {
  if (N != o.N) throw std::invalid_argument("mixed moduli");
  return SemiEl{u * rel_twist(res, o.u, N), (res + o.res) % N, N};
}

SemiEl SemiEl::inv() const {
  int b = (N - res % N) % N;
  return SemiEl{rel_twist(b, inverse(u), N), b, N};
}

SemiEl SemiEl::pow_int(long e) const {
  SemiEl base = e < 0 ? inv() : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  SemiEl acc = rel_identity(N, u.maxdeg());
  while (k) {
    if (k & 1) acc = acc.mul(base);
    base = base.mul(base);
    k >>= 1;
  }
  return acc;
}

SemiEl SemiEl::pow(const Rat& s) const {
  if (s.get_den() == 1) return pow_int(s.get_num().get_si());
  if (res % N != 0)
    throw std::invalid_argument("fractional power of an element with nonzero residue");
  return SemiEl{power(u, s), 0, N};
}

SemiEl rel_identity(int N, int maxdeg) {
  return SemiEl{Series::one(rel_alphabet(N), maxdeg), 0, N};
}

SemiEl eval_relf2(const Word& w, int N, int maxdeg) {
  AlphabetPtr alph = rel_alphabet(N);
  Series X = Series::gen(alph, maxdeg, "X");
  Series Y0 = Series::gen(alph, maxdeg, "Y0");
  SemiEl x{exp_series(X.scaled(Rat(1, N))), 1 % N, N};
  SemiEl y{exp_series(Y0), 0, N};
  SemiEl out = rel_identity(N, maxdeg);
  for (const auto& [name, e] : w.factors) {
    SemiEl gen = name == "x" ? x : name == "y" ? y : rel_identity(N, maxdeg);
    if (name != "x" && name != "y")
      throw std::invalid_argument("unknown relF2 generator: " + name);
    out = out.mul(gen.pow(e));
  }
  return out;
}

int word_residue(const Word& w, int N) {
  long long total = 0;
  for (const auto& [name, e] : w.factors) {
    if (name != "x") continue;
    if (e.get_den() != 1)
      throw std::invalid_argument("residue needs integer x-exponents");
    total += e.get_num().get_si();
  }
  long long r = total % N;
  return static_cast<int>(r < 0 ? r + N : r);
}

}  // namespace dk
