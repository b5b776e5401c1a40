#include "dk/quotient.hpp"

#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dk {

namespace {
constexpr int kCacheFormatVersion = 1;

std::string sanitize(const std::string& key) {
  std::string out;
  for (char c : key) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'))
      out.push_back(c);
    else
      out.push_back('_');
  }
  return out;
}
}  // namespace

QuotientTable::QuotientTable(Presentation pres, int maxdeg, long long monomial_cap,
                             const std::string& cache_dir)
    : pres_(std::move(pres)), maxdeg_(maxdeg) {
  if (!pres_.alph) throw std::invalid_argument("presentation needs an alphabet");
  for (const Series& r : pres_.relations) {
    if (!same_alphabet(r.alphabet(), pres_.alph))
      throw std::invalid_argument("relation alphabet mismatch in " + pres_.key);
    if (r.is_zero()) continue;
    int w = r.min_weight();
    if (w == 0) throw std::invalid_argument("relation with constant term in " + pres_.key);
    for (const auto& [m, c] : r.terms())
      if (m.weight != w)
        throw std::invalid_argument("inhomogeneous relation in " + pres_.key);
  }
  std::vector<long long> counts = word_counts(pres_.alph, maxdeg_);
  long long total = 0;
  for (long long c : counts) {
    total += c;
    if (total > monomial_cap)
      throw std::runtime_error("monomial cap exceeded for " + pres_.key + " at maxdeg " +
                               std::to_string(maxdeg_) + ": more than " +
                               std::to_string(monomial_cap) + " basis words");
  }

  tables_.resize(static_cast<size_t>(maxdeg_) + 1);
  std::string cache_path;
  if (!cache_dir.empty()) {
    cache_path = cache_dir + "/" + sanitize(pres_.key) + "__d" + std::to_string(maxdeg_) +
                 "__v" + std::to_string(kCacheFormatVersion) + ".tbl";
    if (load_cache(cache_path)) return;
  }
  for (int d = 0; d <= maxdeg_; ++d) build_degree(d);
  if (!cache_path.empty()) save_cache(cache_path);
}

void QuotientTable::build_degree(int d) {
  DegreeTable& t = tables_[static_cast<size_t>(d)];
  t.monos = words_of_weight(pres_.alph, d);
  for (size_t i = 0; i < t.monos.size(); ++i) t.index.emplace(t.monos[i], static_cast<int>(i));
  if (d == 0) return;

  std::set<std::vector<std::pair<int, Rat>>> seen;
  for (const Series& r : pres_.relations) {
    if (r.is_zero()) continue;
    int e = r.min_weight();
    if (e > d) continue;
    for (int a = 0; a + e <= d; ++a) {
      int b = d - e - a;
      std::vector<Monomial> lefts = words_of_weight(pres_.alph, a);
      std::vector<Monomial> rights = words_of_weight(pres_.alph, b);
      for (const Monomial& p : lefts) {
        for (const Monomial& q : rights) {
          std::map<int, Rat, std::greater<int>> work;
          for (const auto& [m, c] : r.terms()) {
            Monomial full = mono_concat(mono_concat(p, m), q);
            work[t.index.at(full)] += c;
          }
          std::vector<std::pair<int, Rat>> raw(work.begin(), work.end());
          if (!seen.insert(raw).second) continue;
          std::vector<std::pair<int, Rat>> red = reduce_row(t, std::move(work));
          if (red.empty()) continue;
          Rat lead = red[0].second;
          for (auto& [col, val] : red) val /= lead;
          t.rows.emplace(red[0].first, std::move(red));
        }
      }
    }
  }
}

std::vector<std::pair<int, Rat>> QuotientTable::reduce_row(
    const DegreeTable& t, std::map<int, Rat, std::greater<int>>&& work) const {
  std::vector<std::pair<int, Rat>> out;
  while (!work.empty()) {
    auto it = work.begin();
    int col = it->first;
    Rat val = it->second;
    work.erase(it);
    if (val == 0) continue;
    auto row = t.rows.find(col);
    if (row == t.rows.end()) {
      out.emplace_back(col, val);
      continue;
    }
    const auto& entries = row->second;
    for (size_t j = 1; j < entries.size(); ++j)
      work[entries[j].first] -= val * entries[j].second;
  }
  return out;
}

long long QuotientTable::dim(int d) const {
  if (d < 0 || d > maxdeg_) throw std::invalid_argument("degree out of range");
  const DegreeTable& t = tables_[static_cast<size_t>(d)];
  return static_cast<long long>(t.monos.size()) - static_cast<long long>(t.rows.size());
}

long long QuotientTable::rank(int d) const {
  if (d < 0 || d > maxdeg_) throw std::invalid_argument("degree out of range");
  return static_cast<long long>(tables_[static_cast<size_t>(d)].rows.size());
}

Series QuotientTable::reduce(const Series& s) const {
  if (!same_alphabet(s.alphabet(), pres_.alph))
    throw std::invalid_argument("series alphabet does not match " + pres_.key);
  if (s.maxdeg() > maxdeg_)
    throw std::invalid_argument("series truncation order exceeds table depth");
  Series out(s.alphabet(), s.maxdeg());
  int d = -1;
  std::map<int, Rat, std::greater<int>> work;
  auto flush = [&](int deg) {
    if (deg < 0 || work.empty()) return;
    const DegreeTable& t = tables_[static_cast<size_t>(deg)];
    for (const auto& [col, val] : reduce_row(t, std::move(work)))
      out.add_term(t.monos[static_cast<size_t>(col)], val);
    work.clear();
  };
  for (const auto& [m, c] : s.terms()) {
    if (m.weight != d) {
      flush(d);
      d = m.weight;
    }
    work[tables_[static_cast<size_t>(d)].index.at(m)] += c;
  }
  flush(d);
  return out;
}

bool QuotientTable::equal_mod(const Series& a, const Series& b) const {
  return reduce(a - b).is_zero();
}

QuotientTable::Failure QuotientTable::first_failure(const Series& a, const Series& b) const {
  Failure f;
  Series diff = reduce(a - b);
  if (diff.is_zero()) {
    f.residual = Series::zero(pres_.alph, a.maxdeg());
    return f;
  }
  f.degree = diff.min_weight();
  f.residual = diff.homogeneous_part(f.degree);
  return f;
}

void QuotientTable::save_cache(const std::string& path) const {
  std::ofstream out(path);
  if (!out) return;  // cache is an optimization; failure to write is not an error
  out << "dkquot " << kCacheFormatVersion << "\n";
  out << "key " << pres_.key << "\n";
  out << "maxdeg " << maxdeg_ << "\n";
  for (int d = 0; d <= maxdeg_; ++d) {
    const DegreeTable& t = tables_[static_cast<size_t>(d)];
    out << "degree " << d << " " << t.monos.size() << " " << t.rows.size() << "\n";
    for (const auto& [pivot, entries] : t.rows) {
      out << "row " << entries.size();
      for (const auto& [col, val] : entries) out << " " << col << " " << rat_str(val);
      out << "\n";
    }
  }
}

bool QuotientTable::load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  std::string tag;
  int version = 0;
  if (!(in >> tag >> version) || tag != "dkquot" || version != kCacheFormatVersion) return false;
  std::string key;
  if (!(in >> tag >> key) || tag != "key" || key != pres_.key) return false;
  int depth = -1;
  if (!(in >> tag >> depth) || tag != "maxdeg" || depth != maxdeg_) return false;
  for (int d = 0; d <= maxdeg_; ++d) {
    DegreeTable& t = tables_[static_cast<size_t>(d)];
    t.monos = words_of_weight(pres_.alph, d);
    for (size_t i = 0; i < t.monos.size(); ++i) t.index.emplace(t.monos[i], static_cast<int>(i));
    int deg = -1;
    size_t nmono = 0, nrows = 0;
    if (!(in >> tag >> deg >> nmono >> nrows) || tag != "degree" || deg != d ||
        nmono != t.monos.size())
      return false;
    for (size_t r = 0; r < nrows; ++r) {
      size_t len = 0;
      if (!(in >> tag >> len) || tag != "row" || len == 0) return false;
      std::vector<std::pair<int, Rat>> entries;
      entries.reserve(len);
      for (size_t j = 0; j < len; ++j) {
        int col = -1;
        std::string rat;
        if (!(in >> col >> rat) || col < 0 || col >= static_cast<int>(nmono)) return false;
        entries.emplace_back(col, rat_parse(rat));
      }
      if (entries[0].second != 1) return false;
      t.rows.emplace(entries[0].first, std::move(entries));
    }
  }
  return true;
}

QuotientPtr shared_table(const Presentation& pres, int maxdeg, long long monomial_cap,
                         const std::string& cache_dir) {
  static std::mutex mu;
  static std::map<std::string, QuotientPtr>* memo = new std::map<std::string, QuotientPtr>;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo->find(pres.key);
  if (it != memo->end() && it->second->maxdeg() >= maxdeg) return it->second;
  QuotientPtr made = std::make_shared<QuotientTable>(pres, maxdeg, monomial_cap, cache_dir);
  (*memo)[pres.key] = made;
  return made;
}

}  // namespace dk
