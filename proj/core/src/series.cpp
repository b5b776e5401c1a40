#include "dk/series.hpp"

#include <stdexcept>

namespace dk {

Monomial mono_concat(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.weight = a.weight + b.weight;
  r.idx.reserve(a.idx.size() + b.idx.size());
  r.idx.insert(r.idx.end(), a.idx.begin(), a.idx.end());
  r.idx.insert(r.idx.end(), b.idx.begin(), b.idx.end());
  return r;
}

Monomial mono_of(const AlphabetPtr& alph, const std::vector<std::uint16_t>& idx) {
  Monomial m;
  m.idx = idx;
  for (std::uint16_t i : idx) {
    if (i >= alph->size()) throw std::invalid_argument("letter index out of range");
    m.weight += alph->weight(i);
  }
  return m;
}

Series::Series(AlphabetPtr alph, int maxdeg) : alph_(std::move(alph)), maxdeg_(maxdeg) {
  if (!alph_) throw std::invalid_argument("series needs an alphabet");
  if (maxdeg_ < 0) throw std::invalid_argument("negative truncation order");
}

Series Series::zero(const AlphabetPtr& alph, int maxdeg) { return Series(alph, maxdeg); }

Series Series::one(const AlphabetPtr& alph, int maxdeg) {
  Series s(alph, maxdeg);
  s.add_term(Monomial{}, Rat(1));
  return s;
}

Series Series::gen(const AlphabetPtr& alph, int maxdeg, int letter) {
  Series s(alph, maxdeg);
  if (letter < 0 || letter >= alph->size())
    throw std::invalid_argument("letter index out of range");
  Monomial m;
  m.weight = alph->weight(letter);
  m.idx.push_back(static_cast<std::uint16_t>(letter));
  s.add_term(m, Rat(1));
  return s;
}

Series Series::gen(const AlphabetPtr& alph, int maxdeg, const std::string& name) {
  return gen(alph, maxdeg, alph->index_checked(name));
}

Rat Series::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Series::constant_term() const { return coeff(Monomial{}); }

int Series::min_weight() const {
  if (terms_.empty()) return maxdeg_ + 1;
  return terms_.begin()->first.weight;
}

void Series::add_term(const Monomial& m, const Rat& c) {
  if (m.weight > maxdeg_) return;
  // Two-argument Rat construction does not reduce p/q; stored coefficients
  // must be canonical or comparisons misbehave.
  Rat cc = c;
  cc.canonicalize();
  if (cc == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, std::move(cc));
  } else {
    it->second += cc;
    if (it->second == 0) terms_.erase(it);
  }
}

void Series::check_compatible(const Series& o) const {
  if (!same_alphabet(alph_, o.alph_))
    throw std::invalid_argument("alphabet mismatch: " + alph_->key() + " vs " +
                                o.alph_->key());
  if (maxdeg_ != o.maxdeg_)
    throw std::invalid_argument("truncation order mismatch: " + std::to_string(maxdeg_) +
                                " vs " + std::to_string(o.maxdeg_));
}

Series Series::operator-() const {
  Series r(alph_, maxdeg_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Series& Series::operator+=(const Series& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Series Series::operator+(const Series& o) const {
  Series r = *this;
  r += o;
  return r;
}

Series Series::operator-(const Series& o) const {
  Series r = *this;
  r -= o;
  return r;
}

Series Series::operator*(const Series& o) const {
  check_compatible(o);
  Series r(alph_, maxdeg_);
  for (const auto& [ma, ca] : terms_) {
    if (ma.weight > maxdeg_) continue;
    for (const auto& [mb, cb] : o.terms_) {
      if (ma.weight + mb.weight > maxdeg_) break;  // map is weight-sorted
      r.add_term(mono_concat(ma, mb), ca * cb);
    }
  }
  return r;
}

bool Series::operator==(const Series& o) const {
  check_compatible(o);
  return terms_ == o.terms_;
}

Series Series::scaled(const Rat& c) const {
  Series r(alph_, maxdeg_);
  Rat cc = c;
  cc.canonicalize();
  if (cc == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * cc);
  return r;
}

Series Series::homogeneous_part(int d) const {
  Series r(alph_, maxdeg_);
  for (const auto& [m, c] : terms_) {
    if (m.weight == d) r.terms_.emplace(m, c);
    if (m.weight > d) break;
  }
  return r;
}

Series Series::truncated(int D) const {
  if (D > maxdeg_)
    throw std::invalid_argument("cannot raise truncation order");
  Series r(alph_, D);
  for (const auto& [m, c] : terms_) {
    if (m.weight > D) break;
    r.terms_.emplace(m, c);
  }
  return r;
}

std::vector<long long> word_counts(const AlphabetPtr& alph, int maxdeg) {
  std::vector<long long> c(static_cast<size_t>(maxdeg) + 1, 0);
  c[0] = 1;
  for (int d = 1; d <= maxdeg; ++d) {
    long long total = 0;
    for (int i = 0; i < alph->size(); ++i) {
      int w = alph->weight(i);
      if (w <= d) total += c[static_cast<size_t>(d - w)];
    }
    c[static_cast<size_t>(d)] = total;
  }
  return c;
}

namespace {
void emit_words(const AlphabetPtr& alph, int remaining, Monomial& cur,
                std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = 0; i < alph->size(); ++i) {
    int w = alph->weight(i);
    if (w > remaining) continue;
    cur.idx.push_back(static_cast<std::uint16_t>(i));
    cur.weight += w;
    emit_words(alph, remaining - w, cur, out);
    cur.idx.pop_back();
    cur.weight -= w;
  }
}
}  // namespace

std::vector<Monomial> words_of_weight(const AlphabetPtr& alph, int d) {
  std::vector<Monomial> out;
  Monomial cur;
  emit_words(alph, d, cur, out);
  return out;
}

}  // namespace dk
