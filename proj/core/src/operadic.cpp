#include "dk/operadic.hpp"

#include <stdexcept>

#include "dk/hopf.hpp"

namespace dk {

Family family_of(const Series& s) { return Family::parse(s.alphabet()->key()); }

namespace {

Series sum_of(const AlphabetPtr& alph, int D, const std::vector<std::string>& names) {
  Series s = Series::zero(alph, D);
  for (const auto& n : names) s += gen_series(alph, D, n);
  return s;
}

// Images of the t(n) letters under f, over the out family's alphabet.
std::vector<Series> t_images(const PMap& f, const Family& in_fam, const Family& out_fam,
                             int D) {
  AlphabetPtr src = in_fam.alphabet();
  AlphabetPtr dst = out_fam.alphabet();
  bool gamma = out_fam.kind == Family::Kind::TGamma;
  std::vector<Series> images;
  for (int li = 0; li < src->size(); ++li) {
    const std::string& name = src->name(li);
    std::string inside = name.substr(2, name.size() - 3);
    auto comma = inside.find(',');
    int i = std::stoi(inside.substr(0, comma));
    int j = std::stoi(inside.substr(comma + 1));
    std::vector<std::string> terms;
    for (int k : f.preimage(i))
      for (int l : f.preimage(j))
        terms.push_back(gamma ? tgname(k, l, 0, out_fam.N) : tname(k, l));
    images.push_back(sum_of(dst, D, terms));
  }
  return images;
}

std::vector<Series> tGamma_images(const PMap& f, const Family& in_fam,
                                  const Family& out_fam, int D) {
  AlphabetPtr src = in_fam.alphabet();
  AlphabetPtr dst = out_fam.alphabet();
  int N = in_fam.N;
  std::vector<int> zeros = f.preimage(0);
  std::vector<Series> images;
  for (int li = 0; li < src->size(); ++li) {
    const std::string& name = src->name(li);
    if (name[0] == 'k') {
      int i = std::stoi(name.substr(2, name.size() - 3));
      std::vector<int> pre = f.preimage(i);
      Series img = Series::zero(dst, D);
      for (int j : pre) img += gen_series(dst, D, kname(j));
      for (size_t u = 0; u < pre.size(); ++u)
        for (size_t v = u + 1; v < pre.size(); ++v)
          for (int g = 0; g < N; ++g)
            img += gen_series(dst, D, tgname(pre[u], pre[v], g, N));
      for (int z : zeros)
        for (int k : pre)
          for (int g = 0; g < N; ++g) img += gen_series(dst, D, tgname(z, k, g, N));
      images.push_back(img);
      continue;
    }
    std::string inside = name.substr(2, name.size() - 3);
    auto comma = inside.find(',');
    auto semi = inside.find(';');
    int i = std::stoi(inside.substr(0, comma));
    int j = std::stoi(inside.substr(comma + 1, semi - comma - 1));
    int a = std::stoi(inside.substr(semi + 1));
    std::vector<std::string> terms;
    for (int k : f.preimage(i))
      for (int l : f.preimage(j)) terms.push_back(tgname(k, l, a, N));
    images.push_back(sum_of(dst, D, terms));
  }
  return images;
}

std::vector<Series> tell_images(const PMap& f, const Family& in_fam, const Family& out_fam,
                                int D) {
  AlphabetPtr src = in_fam.alphabet();
  AlphabetPtr dst = out_fam.alphabet();
  std::vector<Series> images;
  for (int li = 0; li < src->size(); ++li) {
    const std::string& name = src->name(li);
    std::vector<std::string> terms;
    if (name[0] == 'a' || name[0] == 'b') {
      int i = std::stoi(name.substr(2, name.size() - 3));
      for (int k : f.preimage(i)) terms.push_back(name[0] == 'a' ? aname(k) : bname(k));
    } else {
      std::string inside = name.substr(2, name.size() - 3);
      auto comma = inside.find(',');
      int i = std::stoi(inside.substr(0, comma));
      int j = std::stoi(inside.substr(comma + 1));
      for (int k : f.preimage(i))
        for (int l : f.preimage(j)) terms.push_back(tname(k, l));
    }
    images.push_back(sum_of(dst, D, terms));
  }
  return images;
}

}  // namespace

Series tellbar_to_tell(const Series& s) {
  Family fam = family_of(s);
  if (fam.kind != Family::Kind::Tellbar)
    throw std::invalid_argument("expected a tellbar series");
  Family full = Family::tell(fam.n);
  AlphabetPtr src = s.alphabet();
  AlphabetPtr dst = full.alphabet();
  std::vector<Series> images;
  for (int i = 0; i < src->size(); ++i)
    images.push_back(gen_series(dst, s.maxdeg(), src->name(i)));
  if (images.empty()) {
    Series out = Series::one(dst, s.maxdeg()).scaled(s.constant_term());
    return out;
  }
  return substitute(s, images);
}

Series tell_to_tellbar(const Series& s) {
  Family fam = family_of(s);
  if (fam.kind != Family::Kind::Tell)
    throw std::invalid_argument("expected a tell series");
  Family bar = Family::tellbar(fam.n);
  AlphabetPtr src = s.alphabet();
  AlphabetPtr dst = bar.alphabet();
  int D = s.maxdeg();
  int n = fam.n;
  std::vector<Series> images;
  for (int li = 0; li < src->size(); ++li) {
    const std::string& name = src->name(li);
    if (name == aname(n) || name == bname(n)) {
      Series img = Series::zero(dst, D);
      for (int r = 1; r < n; ++r)
        img -= gen_series(dst, D, name[0] == 'a' ? aname(r) : bname(r));
      images.push_back(img);
    } else {
      images.push_back(gen_series(dst, D, name));
    }
  }
  return substitute(s, images);
}

Series insert_along(const PMap& f, const Series& s, const Family& out_fam) {
  f.validate();
  Family in_fam = family_of(s);
  int D = s.maxdeg();
  auto strand_count = [](const Family& fam) { return fam.n; };
  if (in_fam.kind == Family::Kind::Free || out_fam.kind == Family::Kind::Free)
    throw std::invalid_argument("insertion needs strand families");
  if (strand_count(in_fam) != f.n || strand_count(out_fam) != f.m)
    throw std::invalid_argument("pmap arities do not match the families");
  if (s.alphabet()->size() == 0)
    return Series::one(out_fam.alphabet(), D).scaled(s.constant_term());

  switch (in_fam.kind) {
    case Family::Kind::T: {
      if (f.hits_zero())
        throw std::invalid_argument("map sends elements to 0 but the source family is singly pointed");
      if (out_fam.kind == Family::Kind::T || out_fam.kind == Family::Kind::TGamma ||
          out_fam.kind == Family::Kind::Tell || out_fam.kind == Family::Kind::Tellbar) {
        if (out_fam.kind == Family::Kind::Tellbar) {
          Family full = Family::tell(out_fam.n);
          Series lifted = substitute(s, t_images(f, in_fam, full, D));
          return tell_to_tellbar(lifted);
        }
        return substitute(s, t_images(f, in_fam, out_fam, D));
      }
      break;
    }
    case Family::Kind::TGamma: {
      if (out_fam.kind == Family::Kind::TGamma && out_fam.N == in_fam.N)
        return substitute(s, tGamma_images(f, in_fam, out_fam, D));
      break;
    }
    case Family::Kind::Tell: {
      if (out_fam.kind == Family::Kind::Tell)
        return substitute(s, tell_images(f, in_fam, out_fam, D));
      if (out_fam.kind == Family::Kind::Tellbar) {
        Family full = Family::tell(out_fam.n);
        Series lifted = substitute(s, tell_images(f, in_fam, full, D));
        return tell_to_tellbar(lifted);
      }
      break;
    }
    case Family::Kind::Tellbar: {
      Series lifted = tellbar_to_tell(s);
      return insert_along(f, lifted, out_fam);
    }
    default:
      break;
  }
  throw std::invalid_argument("unsupported insertion: " + in_fam.key() + " -> " +
                              out_fam.key());
}

namespace {
Series reduced_product(const Series& a, const Series& b, const Family& target,
                       const ReduceOptions& opt) {
  QuotientPtr table =
      shared_table(target.presentation(), a.maxdeg(), opt.monomial_cap, opt.cache_dir);
  return table->reduce(a * b);
}
}  // namespace

Series operad_compose(int p, const Series& host, const Series& guest,
                      const ReduceOptions& opt) {
  Family fh = family_of(host);
  Family fg = family_of(guest);
  if (fh.kind != Family::Kind::T || fg.kind != Family::Kind::T)
    throw std::invalid_argument("operad composition needs t(n) o_p t(m)");
  if (host.maxdeg() != guest.maxdeg())
    throw std::invalid_argument("truncation order mismatch");
  int n = fh.n, m = fg.n;
  Family target = Family::t(n + m - 1);
  Series hi = insert_along(contraction_map(n, p, m), host, target);
  Series gi = insert_along(slot_map(n, p, m), guest, target);
  return reduced_product(hi, gi, target, opt);
}

Series module_compose_gamma(int p, const Series& host, const Series& guest,
                            const ReduceOptions& opt) {
  Family fh = family_of(host);
  Family fg = family_of(guest);
  if (fh.kind != Family::Kind::TGamma || fg.kind != Family::Kind::T)
    throw std::invalid_argument("module composition needs tGamma(n,N) o_p t(m)");
  if (host.maxdeg() != guest.maxdeg())
    throw std::invalid_argument("truncation order mismatch");
  int n = fh.n, m = fg.n;
  Family target = Family::tGamma(n + m - 1, fh.N);
  Series hi = insert_along(contraction_map(n, p, m), host, target);
  Series gi = insert_along(slot_map(n, p, m), guest, target);
  return reduced_product(hi, gi, target, opt);
}

Series monoid_compose_gamma(const Series& host, const Series& guest,
                            const ReduceOptions& opt) {
  Family fh = family_of(host);
  Family fg = family_of(guest);
  if (fh.kind != Family::Kind::TGamma || fg.kind != Family::Kind::TGamma ||
      fh.N != fg.N)
    throw std::invalid_argument("stacking needs tGamma(n,N) o_0 tGamma(m,N)");
  if (host.maxdeg() != guest.maxdeg())
    throw std::invalid_argument("truncation order mismatch");
  int n = fh.n, m = fg.n;
  Family target = Family::tGamma(n + m, fh.N);
  Series hi = insert_along(stack_host_map(n, m), host, target);
  Series gi = insert_along(stack_guest_map(n, m), guest, target);
  return reduced_product(hi, gi, target, opt);
}

Series module_compose_ell(int p, const Series& host, const Series& guest,
                          const ReduceOptions& opt) {
  Family fh = family_of(host);
  Family fg = family_of(guest);
  bool bar = fh.kind == Family::Kind::Tellbar;
  if ((fh.kind != Family::Kind::Tell && !bar) || fg.kind != Family::Kind::T)
    throw std::invalid_argument("elliptic module composition needs tell/tellbar(n) o_p t(m)");
  if (host.maxdeg() != guest.maxdeg())
    throw std::invalid_argument("truncation order mismatch");
  int n = fh.n, m = fg.n;
  Family target = bar ? Family::tellbar(n + m - 1) : Family::tell(n + m - 1);
  Series hi = insert_along(contraction_map(n, p, m), host, target);
  Series gi = insert_along(slot_map(n, p, m), guest, target);
  return reduced_product(hi, gi, target, opt);
}

}  // namespace dk
