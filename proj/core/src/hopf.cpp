#include "dk/hopf.hpp"

#include <stdexcept>

namespace dk {

TensorSeries::TensorSeries(AlphabetPtr alph, int maxdeg)
    : alph_(std::move(alph)), maxdeg_(maxdeg) {}

void TensorSeries::add_term(const Monomial& a, const Monomial& b, const Rat& c) {
  if (a.weight + b.weight > maxdeg_) return;
  Rat cc = c;
  cc.canonicalize();
  if (cc == 0) return;
  auto key = std::make_pair(a, b);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::move(cc));
  } else {
    it->second += cc;
    if (it->second == 0) terms_.erase(it);
  }
}

bool TensorSeries::operator==(const TensorSeries& o) const {
  if (!same_alphabet(alph_, o.alph_) || maxdeg_ != o.maxdeg_)
    throw std::invalid_argument("tensor series mismatch");
  return terms_ == o.terms_;
}

TensorSeries TensorSeries::operator-(const TensorSeries& o) const {
  if (!same_alphabet(alph_, o.alph_) || maxdeg_ != o.maxdeg_)
    throw std::invalid_argument("tensor series mismatch");
  TensorSeries r(alph_, maxdeg_);
  r.terms_ = terms_;
  for (const auto& [k, c] : o.terms_) {
    auto [it, fresh] = r.terms_.emplace(k, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

TensorSeries coproduct(const Series& s) {
  TensorSeries out(s.alphabet(), s.maxdeg());
  const AlphabetPtr& alph = s.alphabet();
  for (const auto& [m, c] : s.terms()) {
    size_t n = m.idx.size();
    if (n > 62) throw std::invalid_argument("word too long for coproduct");
    // Each letter goes left or right; order within each side is preserved.
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
      Monomial left, right;
      for (size_t i = 0; i < n; ++i) {
        std::uint16_t letter = m.idx[i];
        int w = alph->weight(letter);
        if (mask & (std::uint64_t(1) << i)) {
          left.idx.push_back(letter);
          left.weight += w;
        } else {
          right.idx.push_back(letter);
          right.weight += w;
        }
      }
      out.add_term(left, right, c);
    }
  }
  return out;
}

TensorSeries tensor_of(const Series& left, const Series& right) {
  left.check_compatible(right);
  TensorSeries out(left.alphabet(), left.maxdeg());
  for (const auto& [ma, ca] : left.terms())
    for (const auto& [mb, cb] : right.terms()) out.add_term(ma, mb, ca * cb);
  return out;
}

bool is_grouplike(const Series& s) {
  if (s.constant_term() != 1) return false;
  return coproduct(s) == tensor_of(s, s);
}

bool is_primitive(const Series& s) {
  if (s.constant_term() != 0) return false;
  Series unit = Series::one(s.alphabet(), s.maxdeg());
  TensorSeries want = tensor_of(s, unit);
  TensorSeries sym = tensor_of(unit, s);
  TensorSeries have = coproduct(s);
  return (have - want) == sym;
}

Series exp_series(const Series& a) {
  if (a.constant_term() != 0)
    throw std::invalid_argument("exp needs zero constant term");
  Series out = Series::one(a.alphabet(), a.maxdeg());
  if (a.is_zero()) return out;
  Series pow = Series::one(a.alphabet(), a.maxdeg());
  Rat factorial(1);
  int minw = a.min_weight();
  int nmax = minw > 0 ? a.maxdeg() / minw : a.maxdeg();
  for (int n = 1; n <= nmax; ++n) {
    pow = pow * a;
    factorial *= n;
    if (pow.is_zero()) break;
    out += pow.scaled(Rat(1) / factorial);
  }
  return out;
}

Series log_series(const Series& g) {
  if (g.constant_term() != 1)
    throw std::invalid_argument("log needs constant term 1");
  Series h = g - Series::one(g.alphabet(), g.maxdeg());
  Series out = Series::zero(g.alphabet(), g.maxdeg());
  if (h.is_zero()) return out;
  Series pow = Series::one(g.alphabet(), g.maxdeg());
  int minw = h.min_weight();
  int nmax = minw > 0 ? g.maxdeg() / minw : g.maxdeg();
  Rat sign(1);
  for (int n = 1; n <= nmax; ++n) {
    pow = pow * h;
    if (pow.is_zero()) break;
    out += pow.scaled(sign / n);
    sign = -sign;
  }
  return out;
}

Series bch(const Series& a, const Series& b) {
  return log_series(exp_series(a) * exp_series(b));
}

Series inverse(const Series& g) {
  Rat c = g.constant_term();
  if (c == 0) throw std::invalid_argument("inverse needs invertible constant term");
  // g = c(1 + u) with u of positive weight: g^{-1} = c^{-1} sum (-u)^n.
  Series u = g.scaled(Rat(1) / c) - Series::one(g.alphabet(), g.maxdeg());
  Series out = Series::one(g.alphabet(), g.maxdeg());
  Series pow = Series::one(g.alphabet(), g.maxdeg());
  int minw = u.is_zero() ? g.maxdeg() + 1 : u.min_weight();
  int nmax = minw > 0 ? g.maxdeg() / minw : 0;
  for (int n = 1; n <= nmax; ++n) {
    pow = pow * u;
    if (pow.is_zero()) break;
    out += pow.scaled(Rat(n % 2 == 0 ? 1 : -1));
  }
  return out.scaled(Rat(1) / c);
}

Series power(const Series& g, const Rat& s) {
  return exp_series(log_series(g).scaled(s));
}

Series substitute(const Series& s, const std::vector<Series>& images) {
  const AlphabetPtr& src = s.alphabet();
  if (static_cast<int>(images.size()) != src->size())
    throw std::invalid_argument("substitute needs one image per letter");
  if (images.empty())
    throw std::invalid_argument("substitute from an empty alphabet has no target");
  for (int i = 1; i < src->size(); ++i) images[0].check_compatible(images[static_cast<size_t>(i)]);
  const Series& model = images[0];
  Series out = Series::zero(model.alphabet(), model.maxdeg());
  // Cache word images by shared prefix is overkill here; loop directly.
  for (const auto& [m, c] : s.terms()) {
    Series word = Series::one(model.alphabet(), model.maxdeg());
    for (std::uint16_t letter : m.idx) {
      word = word * images[letter];
      if (word.is_zero()) break;
    }
    out += word.scaled(c);
  }
  return out;
}

Series conjugate(const Series& u, const Series& g) { return u * g * inverse(u); }

Series bracket(const Series& a, const Series& b) { return a * b - b * a; }

}  // namespace dk
