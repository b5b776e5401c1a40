#include "dk/families.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "dk/hopf.hpp"

namespace dk {

namespace {
std::string num(int v) { return std::to_string(v); }

int mod(int a, int N) {
  int r = a % N;
  return r < 0 ? r + N : r;
}

bool valid_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}
}  // namespace

std::string tname(int i, int j) {
  if (i == j) throw std::invalid_argument("t generator needs distinct strands");
  if (i > j) std::swap(i, j);
  return "t[" + num(i) + "," + num(j) + "]";
}

std::string kname(int i) { return "k[" + num(i) + "]"; }

std::string tgname(int i, int j, int a, int N) {
  if (i == j) throw std::invalid_argument("t generator needs distinct strands");
  a = mod(a, N);
  if (i > j) {
    std::swap(i, j);
    a = mod(-a, N);
  }
  return "t[" + num(i) + "," + num(j) + ";" + num(a) + "]";
}

std::string aname(int i) { return "a[" + num(i) + "]"; }
std::string bname(int i) { return "b[" + num(i) + "]"; }

Family Family::free_on(std::vector<std::string> names) {
  Family f;
  f.kind = Kind::Free;
  f.names = std::move(names);
  for (const auto& s : f.names)
    if (!valid_ident(s)) throw std::invalid_argument("bad generator name: " + s);
  return f;
}

Family Family::t(int n) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
  Family f;
  f.kind = Kind::T;
  f.n = n;
  return f;
}

Family Family::tGamma(int n, int N) {
  if (n < 1 || N < 1) throw std::invalid_argument("need n >= 1 and N >= 1");
  Family f;
  f.kind = Kind::TGamma;
  f.n = n;
  f.N = N;
  return f;
}

Family Family::tell(int n) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
  Family f;
  f.kind = Kind::Tell;
  f.n = n;
  return f;
}

Family Family::tellbar(int n) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
  Family f;
  f.kind = Kind::Tellbar;
  f.n = n;
  return f;
}

Family Family::parse(const std::string& text) {
  auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw std::invalid_argument("malformed family: " + text);
  std::string head = text.substr(0, open);
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  std::vector<std::string> args;
  std::string cur;
  for (char c : inner) {
    if (c == ',') {
      args.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !args.empty()) args.push_back(cur);
  auto as_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed family argument: " + s + " in " + text);
    return std::stoi(s);
  };
  if (head == "free") return free_on(args);
  if (head == "t" && args.size() == 1) return t(as_int(args[0]));
  if (head == "tGamma" && args.size() == 2) return tGamma(as_int(args[0]), as_int(args[1]));
  if (head == "tell" && args.size() == 1) return tell(as_int(args[0]));
  if (head == "tellbar" && args.size() == 1) return tellbar(as_int(args[0]));
  throw std::invalid_argument("unknown family: " + text);
}

std::string Family::key() const {
  switch (kind) {
    case Kind::Free: {
      std::string k = "free(";
      for (size_t i = 0; i < names.size(); ++i) {
        if (i) k += ",";
        k += names[i];
      }
      return k + ")";
    }
    case Kind::T:
      return "t(" + num(n) + ")";
    case Kind::TGamma:
      return "tGamma(" + num(n) + "," + num(N) + ")";
    case Kind::Tell:
      return "tell(" + num(n) + ")";
    case Kind::Tellbar:
      return "tellbar(" + num(n) + ")";
  }
  throw std::logic_error("unreachable");
}

AlphabetPtr Family::alphabet() const {
  std::vector<Letter> letters;
  switch (kind) {
    case Kind::Free:
      for (const auto& s : names) letters.push_back({s, 1});
      break;
    case Kind::T:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) letters.push_back({tname(i, j), 1});
      break;
    case Kind::TGamma:
      for (int i = 1; i <= n; ++i) letters.push_back({kname(i), 1});
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int a = 0; a < N; ++a) letters.push_back({tgname(i, j, a, N), 1});
      break;
    case Kind::Tell:
      for (int i = 1; i <= n; ++i) letters.push_back({aname(i), 1});
      for (int i = 1; i <= n; ++i) letters.push_back({bname(i), 1});
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) letters.push_back({tname(i, j), 2});
      break;
    case Kind::Tellbar:
      for (int i = 1; i < n; ++i) letters.push_back({aname(i), 1});
      for (int i = 1; i < n; ++i) letters.push_back({bname(i), 1});
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) letters.push_back({tname(i, j), 2});
      break;
  }
  return Alphabet::make(key(), std::move(letters));
}

Series gen_series(const AlphabetPtr& alph, int maxdeg, const std::string& name) {
  return Series::gen(alph, maxdeg, name);
}

namespace {

std::vector<Series> t_relations(const AlphabetPtr& alph, int n) {
  std::vector<Series> rels;
  auto g = [&](int i, int j) { return gen_series(alph, 2, tname(i, j)); };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        rels.push_back(bracket(g(i, j), g(i, k) + g(j, k)));
      }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = i + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (k == j || l == j) continue;
          rels.push_back(bracket(g(i, j), g(k, l)));
        }
  return rels;
}

std::vector<Series> tGamma_relations(const AlphabetPtr& alph, int n, int N) {
  std::vector<Series> rels;
  auto kg = [&](int i) { return gen_series(alph, 2, kname(i)); };
  auto tg = [&](int i, int j, int a) { return gen_series(alph, 2, tgname(i, j, a, N)); };
  auto tsum = [&](int i, int j) {
    Series s = Series::zero(alph, 2);
    for (int a = 0; a < N; ++a) s += tg(i, j, a);
    return s;
  };
  // [k_i, t_jk^a] with i outside {j,k}.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        if (i == j || i == k) continue;
        for (int a = 0; a < N; ++a) rels.push_back(bracket(kg(i), tg(j, k, a)));
      }
  // [t_ij^a, t_kl^b] with disjoint strand pairs.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = i + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (k == j || l == j) continue;
          for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) rels.push_back(bracket(tg(i, j, a), tg(k, l, b)));
        }
  // [t_ij^a, t_ik^{a+b} + t_jk^b] over ordered distinct triples.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        for (int a = 0; a < N; ++a)
          for (int b = 0; b < N; ++b)
            rels.push_back(bracket(tg(i, j, a), tg(i, k, a + b) + tg(j, k, b)));
      }
    }
  // [k_i, k_j + sum_a t_ij^a] over ordered pairs.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      rels.push_back(bracket(kg(i), kg(j) + tsum(i, j)));
    }
  // [k_i + k_j + sum_b t_ij^b, t_ij^a] over ordered pairs and labels.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      for (int a = 0; a < N; ++a)
        rels.push_back(bracket(kg(i) + kg(j) + tsum(i, j), tg(i, j, a)));
    }
  return rels;
}

std::vector<Series> tell_relations(const AlphabetPtr& alph, int n) {
  std::vector<Series> rels;
  auto ag = [&](int i) { return gen_series(alph, 4, aname(i)); };
  auto bg = [&](int i) { return gen_series(alph, 4, bname(i)); };
  auto tg = [&](int i, int j) { return gen_series(alph, 4, tname(i, j)); };
  // [t_ij, t_kl] with disjoint pairs.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = i + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (k == j || l == j) continue;
          rels.push_back(bracket(tg(i, j), tg(k, l)));
        }
  // [t_ij, t_ik + t_jk].
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        rels.push_back(bracket(tg(i, j), tg(i, k) + tg(j, k)));
      }
  // [a_i, b_j] = t_ij for i != j.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      rels.push_back(bracket(ag(i), bg(j)) - tg(i, j));
    }
  // [a_i, a_j] = [b_i, b_j] = 0.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      rels.push_back(bracket(ag(i), ag(j)));
      rels.push_back(bracket(bg(i), bg(j)));
    }
  // [a_i, b_i] = -sum_{j != i} t_ij.
  for (int i = 1; i <= n; ++i) {
    Series s = bracket(ag(i), bg(i));
    for (int j = 1; j <= n; ++j)
      if (j != i) s += tg(i, j);
    rels.push_back(s);
  }
  // [a_i, t_jk] = [b_i, t_jk] = 0 for i outside {j,k}.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        if (i == j || i == k) continue;
        rels.push_back(bracket(ag(i), tg(j, k)));
        rels.push_back(bracket(bg(i), tg(j, k)));
      }
  // [a_i + a_j, t_ij] = [b_i + b_j, t_ij] = 0.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      rels.push_back(bracket(ag(i) + ag(j), tg(i, j)));
      rels.push_back(bracket(bg(i) + bg(j), tg(i, j)));
    }
  return rels;
}

// Images of tell(n) letters inside tellbar(n): the last a/b letters are
// eliminated by the zero-sum constraints.
std::vector<Series> tellbar_images(const Family& fam, const AlphabetPtr& src,
                                   const AlphabetPtr& dst, int maxdeg) {
  int n = fam.n;
  std::vector<Series> images;
  for (int i = 0; i < src->size(); ++i) {
    const std::string& name = src->name(i);
    Series img = Series::zero(dst, maxdeg);
    if (name == aname(n)) {
      for (int r = 1; r < n; ++r) img -= gen_series(dst, maxdeg, aname(r));
    } else if (name == bname(n)) {
      for (int r = 1; r < n; ++r) img -= gen_series(dst, maxdeg, bname(r));
    } else {
      img = gen_series(dst, maxdeg, name);
    }
    images.push_back(img);
  }
  return images;
}

}  // namespace

std::vector<Series> Family::relations() const {
  AlphabetPtr alph = alphabet();
  switch (kind) {
    case Kind::Free:
      return {};
    case Kind::T:
      return t_relations(alph, n);
    case Kind::TGamma:
      return tGamma_relations(alph, n, N);
    case Kind::Tell:
      return tell_relations(alph, n);
    case Kind::Tellbar: {
      Family full = Family::tell(n);
      AlphabetPtr src = full.alphabet();
      std::vector<Series> out;
      std::vector<Series> images = tellbar_images(*this, src, alph, 4);
      for (const Series& r : full.relations()) {
        Series s = substitute(r, images);
        if (!s.is_zero()) out.push_back(s);
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

Presentation Family::presentation() const {
  return Presentation{alphabet(), relations(), key()};
}

Series Family::sym_act(const std::vector<int>& perm, const Series& s) const {
  if (kind == Kind::Free)
    throw std::invalid_argument("free alphabets carry no relabeling action");
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation arity mismatch");
  std::vector<char> hit(static_cast<size_t>(n) + 1, 0);
  for (int v : perm) {
    if (v < 1 || v > n || hit[static_cast<size_t>(v)])
      throw std::invalid_argument("not a permutation of 1..n");
    hit[static_cast<size_t>(v)] = 1;
  }
  auto p = [&](int i) { return perm[static_cast<size_t>(i - 1)]; };
  AlphabetPtr alph = alphabet();
  if (!same_alphabet(s.alphabet(), alph))
    throw std::invalid_argument("series does not live over " + key());
  int D = s.maxdeg();
  std::vector<Series> images;
  for (int li = 0; li < alph->size(); ++li) {
    const std::string& name = alph->name(li);
    // Parse the canonical spelling back into indices.
    auto body = [&](char open) {
      auto l = name.find(open);
      return name.substr(l + 1, name.size() - l - 2);
    };
    Series img = Series::zero(alph, D);
    if (name[0] == 'k') {
      int i = std::stoi(body('['));
      img = gen_series(alph, D, kname(p(i)));
    } else if (name[0] == 'a' || name[0] == 'b') {
      int i = std::stoi(body('['));
      int q = p(i);
      bool is_a = name[0] == 'a';
      if (kind == Kind::Tellbar && q == n) {
        for (int r = 1; r < n; ++r)
          img -= gen_series(alph, D, is_a ? aname(r) : bname(r));
      } else {
        img = gen_series(alph, D, is_a ? aname(q) : bname(q));
      }
    } else {
      std::string inside = body('[');
      auto comma = inside.find(',');
      auto semi = inside.find(';');
      int i = std::stoi(inside.substr(0, comma));
      int j = std::stoi(inside.substr(comma + 1, semi == std::string::npos
                                                     ? std::string::npos
                                                     : semi - comma - 1));
      if (semi == std::string::npos) {
        img = gen_series(alph, D, tname(p(i), p(j)));
      } else {
        int a = std::stoi(inside.substr(semi + 1));
        img = gen_series(alph, D, tgname(p(i), p(j), a, N));
      }
    }
    images.push_back(img);
  }
  return substitute(s, images);
}

Series Family::gamma_act(const std::vector<int>& gamma, const Series& s) const {
  if (kind != Kind::TGamma)
    throw std::invalid_argument("label twists act on tGamma families only");
  if (static_cast<int>(gamma.size()) != n)
    throw std::invalid_argument("twist tuple arity mismatch");
  AlphabetPtr alph = alphabet();
  if (!same_alphabet(s.alphabet(), alph))
    throw std::invalid_argument("series does not live over " + key());
  int D = s.maxdeg();
  std::vector<Series> images;
  for (int li = 0; li < alph->size(); ++li) {
    const std::string& name = alph->name(li);
    if (name[0] == 'k') {
      images.push_back(gen_series(alph, D, name));
      continue;
    }
    std::string inside = name.substr(2, name.size() - 3);
    auto comma = inside.find(',');
    auto semi = inside.find(';');
    int i = std::stoi(inside.substr(0, comma));
    int j = std::stoi(inside.substr(comma + 1, semi - comma - 1));
    int a = std::stoi(inside.substr(semi + 1));
    int twisted = a + gamma[static_cast<size_t>(i - 1)] - gamma[static_cast<size_t>(j - 1)];
    images.push_back(gen_series(alph, D, tgname(i, j, twisted, N)));
  }
  return substitute(s, images);
}

}  // namespace dk
