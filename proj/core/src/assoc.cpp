#include "dk/assoc.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "dk/fin_map.hpp"
#include "dk/lyndon.hpp"
#include "dk/operadic.hpp"

namespace dk {

AlphabetPtr phi_alphabet() { return Alphabet::make("free(x,y)", {{"x", 1}, {"y", 1}}); }

AlphabetPtr psi_alphabet(int N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  std::vector<Letter> letters{{"u", 1}};
  std::string key = "free(u";
  for (int a = 0; a < N; ++a) {
    letters.push_back({"w" + std::to_string(a), 1});
    key += ",w" + std::to_string(a);
  }
  key += ")";
  return Alphabet::make(key, std::move(letters));
}

AlphabetPtr ab_alphabet() { return Alphabet::make("free(a,b)", {{"a", 1}, {"b", 1}}); }

Candidate trivial_drinfeld(int maxdeg) {
  Candidate c;
  c.kind = Candidate::Kind::Drinfeld;
  c.lambda = 0;
  c.phi = Series::one(phi_alphabet(), maxdeg);
  return c;
}

Candidate trivial_cyclotomic(int N, int maxdeg) {
  Candidate c;
  c.kind = Candidate::Kind::Cyclotomic;
  c.N = N;
  c.lambda = 0;
  c.phi = Series::one(phi_alphabet(), maxdeg);
  c.psi = Series::one(psi_alphabet(N), maxdeg);
  return c;
}

Candidate trivial_elliptic(int maxdeg) {
  Candidate c;
  c.kind = Candidate::Kind::Elliptic;
  c.lambda = 0;
  c.phi = Series::one(phi_alphabet(), maxdeg);
  c.aplus = Series::one(ab_alphabet(), maxdeg);
  c.aminus = Series::one(ab_alphabet(), maxdeg);
  return c;
}

bool CheckReport::pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::string CheckReport::str() const {
  std::ostringstream out;
  for (const auto& r : results)
    out << r.name << " " << (r.pass ? "PASS" : "FAIL") << " deg=" << r.degree
        << " residual_terms=" << r.residual_terms << "\n";
  for (const auto& n : notes) out << n << "\n";
  return out.str();
}

namespace {

EquationResult from_diff(const std::string& name, const Series& diff, int checked_deg) {
  EquationResult r;
  r.name = name;
  if (diff.is_zero()) {
    r.pass = true;
    r.degree = checked_deg;
    r.residual_terms = 0;
    return r;
  }
  r.pass = false;
  r.degree = diff.min_weight();
  r.residual_terms = static_cast<int>(diff.homogeneous_part(r.degree).support_size());
  return r;
}

EquationResult eq_mod(const std::string& name, const QuotientPtr& table, const Series& lhs,
                      const Series& rhs) {
  return from_diff(name, table->reduce(lhs - rhs), lhs.maxdeg());
}

EquationResult eq_plain(const std::string& name, const Series& lhs, const Series& rhs) {
  return from_diff(name, lhs - rhs, lhs.maxdeg());
}

EquationResult eq_grouplike(const std::string& name, const Series& s) {
  EquationResult r;
  r.name = name;
  TensorSeries diff = coproduct(s) - tensor_of(s, s);
  bool unit = s.constant_term() == 1;
  if (unit && diff.is_zero()) {
    r.pass = true;
    r.degree = s.maxdeg();
    r.residual_terms = 0;
    return r;
  }
  r.pass = false;
  if (!unit) {
    r.degree = 0;
    r.residual_terms = 1;
    return r;
  }
  int best = s.maxdeg() + 1;
  for (const auto& [key, c] : diff.terms())
    best = std::min(best, key.first.weight + key.second.weight);
  int count = 0;
  for (const auto& [key, c] : diff.terms())
    if (key.first.weight + key.second.weight == best) ++count;
  r.degree = best;
  r.residual_terms = count;
  return r;
}

Series swap_xy(const Series& phi) {
  AlphabetPtr alph = phi.alphabet();
  int D = phi.maxdeg();
  return substitute(phi, {Series::gen(alph, D, "y"), Series::gen(alph, D, "x")});
}

void require_phi(const Candidate& c) {
  if (!same_alphabet(c.phi.alphabet(), phi_alphabet()))
    throw std::invalid_argument("phi must live over free(x,y)");
}

}  // namespace

Series phi_in_t3(const Series& phi, const CheckOptions& opt) {
  Family t3 = Family::t(3);
  AlphabetPtr alph = t3.alphabet();
  int D = phi.maxdeg();
  Series img = substitute(phi, {gen_series(alph, D, tname(1, 2)), gen_series(alph, D, tname(2, 3))});
  QuotientPtr table = shared_table(t3.presentation(), D, opt.monomial_cap, opt.cache_dir);
  return table->reduce(img);
}

CheckReport check_drinfeld(const Candidate& c, const CheckOptions& opt) {
  require_phi(c);
  int D = c.maxdeg();
  AlphabetPtr f2 = phi_alphabet();
  CheckReport report;

  report.results.push_back(eq_grouplike("grouplike", c.phi));

  {
    // Strand-deletion spot check: placing the element on strands 1 and 3 of a
    // two-strand target kills it.
    Series in_t3 = phi_in_t3(c.phi, opt);
    Family t2 = Family::t(2);
    PMap f = PMap::parse("pmap(3<-2: 1||2)");
    Series dropped = insert_along(f, in_t3, t2);
    QuotientPtr table = shared_table(t2.presentation(), D, opt.monomial_cap, opt.cache_dir);
    report.results.push_back(
        eq_mod("unit", table, dropped, Series::one(t2.alphabet(), D)));
  }

  report.results.push_back(
      eq_plain("duality", swap_xy(c.phi) * c.phi, Series::one(f2, D)));

  {
    Family t4 = Family::t(4);
    AlphabetPtr alph = t4.alphabet();
    auto g = [&](int i, int j) { return gen_series(alph, D, tname(i, j)); };
    auto phi_at = [&](const Series& u, const Series& v) {
      return substitute(c.phi, {u, v});
    };
    Series lhs = phi_at(g(2, 3), g(3, 4)) * phi_at(g(1, 2) + g(1, 3), g(2, 4) + g(3, 4)) *
                 phi_at(g(1, 2), g(2, 3));
    Series rhs = phi_at(g(1, 2), g(2, 3) + g(2, 4)) * phi_at(g(1, 3) + g(2, 3), g(3, 4));
    QuotientPtr table = shared_table(t4.presentation(), D, opt.monomial_cap, opt.cache_dir);
    report.results.push_back(eq_mod("pentagon", table, lhs, rhs));
  }

  {
    Series x = Series::gen(f2, D, "x");
    Series y = Series::gen(f2, D, "y");
    Series z = -x - y;
    Rat half = c.lambda / 2;
    Series prod = exp_series(x.scaled(half)) * substitute(c.phi, {y, x}) *
                  exp_series(y.scaled(half)) * substitute(c.phi, {z, y}) *
                  exp_series(z.scaled(half)) * substitute(c.phi, {x, z});
    report.results.push_back(eq_plain("hexagon", prod, Series::one(f2, D)));
  }

  return report;
}

CheckReport check_cyclotomic(const Candidate& c, const CheckOptions& opt) {
  if (c.kind != Candidate::Kind::Cyclotomic)
    throw std::invalid_argument("not a cyclotomic candidate");
  require_phi(c);
  int N = c.N;
  if (!same_alphabet(c.psi.alphabet(), psi_alphabet(N)))
    throw std::invalid_argument("psi must live over the u,w slot alphabet");
  int D = c.maxdeg();
  CheckReport report;
  for (EquationResult r : check_drinfeld(c, opt).results) {
    r.name = "phi_" + r.name;
    report.results.push_back(r);
  }
  report.results.push_back(eq_grouplike("psi_grouplike", c.psi));

  auto psi_at = [&](const std::vector<Series>& images) {
    return substitute(c.psi, images);
  };

  {
    Family t3g = Family::tGamma(3, N);
    AlphabetPtr alph = t3g.alphabet();
    auto tg = [&](int i, int j, int a) { return gen_series(alph, D, tgname(i, j, a, N)); };
    auto kg = [&](int i) { return gen_series(alph, D, kname(i)); };
    auto tsum = [&](int i, int j) {
      Series s = Series::zero(alph, D);
      for (int a = 0; a < N; ++a) s += tg(i, j, a);
      return s;
    };
    std::vector<Series> A{kg(1) + tsum(1, 2) + tsum(1, 3)};
    std::vector<Series> B{kg(1)};
    std::vector<Series> C{kg(1)};
    std::vector<Series> Dm{kg(1) + kg(2) + tsum(1, 2)};
    for (int a = 0; a < N; ++a) {
      A.push_back(tg(1, 2, a));
      B.push_back(tg(1, 2, a) + tg(1, 3, a));
      C.push_back(tg(1, 2, a));
      Dm.push_back(tg(1, 2, a) + tg(1, 3, a));
    }
    Series E = substitute(c.phi, {tg(1, 2, 0), tg(2, 3, 0)});
    Series lhs = psi_at(A) * psi_at(B);
    Series rhs = psi_at(C) * psi_at(Dm) * E;
    QuotientPtr table = shared_table(t3g.presentation(), D, opt.monomial_cap, opt.cache_dir);
    report.results.push_back(eq_mod("mixed_pentagon", table, lhs, rhs));
  }

  {
    Family t2g = Family::tGamma(2, N);
    AlphabetPtr alph = t2g.alphabet();
    auto tg = [&](int a) { return gen_series(alph, D, tgname(1, 2, a, N)); };
    std::vector<Series> plain{gen_series(alph, D, kname(1))};
    std::vector<Series> turned{gen_series(alph, D, kname(1))};
    for (int a = 0; a < N; ++a) {
      plain.push_back(tg(a));
      int r = opt.octagon == OctagonReading::Literal ? (N - a) % N : (a + 1) % N;
      turned.push_back(tg(r));
    }
    Series psi_p = psi_at(plain);
    Series psi_g = psi_at(turned);
    Series half_t = exp_series(tg(0).scaled(c.lambda / 2));
    Series front = exp_series(gen_series(alph, D, kname(1)).scaled(c.lambda / N)) * psi_p *
                   half_t * inverse(psi_g) *
                   exp_series(gen_series(alph, D, kname(2)).scaled(c.lambda / N));
    Series tail = psi_g * half_t * inverse(psi_p);
    Series twisted = t2g.gamma_act({0, 1}, tail);
    QuotientPtr table = shared_table(t2g.presentation(), D, opt.monomial_cap, opt.cache_dir);
    report.results.push_back(
        eq_mod("octagon", table, front * twisted, Series::one(alph, D)));
  }

  return report;
}

CheckReport check_elliptic(const Candidate& c, const CheckOptions& opt) {
  if (c.kind != Candidate::Kind::Elliptic)
    throw std::invalid_argument("not an elliptic candidate");
  require_phi(c);
  if (!same_alphabet(c.aplus.alphabet(), ab_alphabet()) ||
      !same_alphabet(c.aminus.alphabet(), ab_alphabet()))
    throw std::invalid_argument("aplus/aminus must live over free(a,b)");
  int D = c.maxdeg();
  CheckReport report;
  for (EquationResult r : check_drinfeld(c, opt).results) {
    r.name = "phi_" + r.name;
    report.results.push_back(r);
  }
  report.results.push_back(eq_grouplike("aplus_grouplike", c.aplus));
  report.results.push_back(eq_grouplike("aminus_grouplike", c.aminus));

  Family bar3 = Family::tellbar(3);
  AlphabetPtr alph = bar3.alphabet();
  QuotientPtr table = shared_table(bar3.presentation(), D, opt.monomial_cap, opt.cache_dir);
  auto t = [&](int i, int j) { return gen_series(alph, D, tname(i, j)); };
  Series a1 = gen_series(alph, D, aname(1));
  Series a2 = gen_series(alph, D, aname(2));
  Series b1 = gen_series(alph, D, bname(1));
  Series b2 = gen_series(alph, D, bname(2));
  Series alpha[4] = {Series(), a1, a2, -a1 - a2};
  Series beta[4] = {Series(), b1, b2, -b1 - b2};
  auto phi_at = [&](const Series& u, const Series& v) { return substitute(c.phi, {u, v}); };
  auto A_at = [&](const Series& s, const Series& u, const Series& v) {
    return substitute(s, {u, v});
  };

  for (int sign = 0; sign < 2; ++sign) {
    const Series& As = sign == 0 ? c.aplus : c.aminus;
    Series F1 = phi_at(t(1, 2), t(2, 3)) * A_at(As, alpha[1], beta[2] + beta[3]) *
                exp_series((t(1, 2) + t(1, 3)).scaled(-c.lambda / 2));
    Series F2 = phi_at(t(2, 3), t(1, 3)) * A_at(As, alpha[2], beta[3] + beta[1]) *
                exp_series((t(2, 3) + t(1, 2)).scaled(-c.lambda / 2));
    Series F3 = phi_at(t(1, 3), t(1, 2)) * A_at(As, alpha[3], beta[1] + beta[2]) *
                exp_series((t(1, 3) + t(2, 3)).scaled(-c.lambda / 2));
    report.results.push_back(eq_mod(sign == 0 ? "hexagon_plus" : "hexagon_minus", table,
                                    F1 * F2 * F3, Series::one(alph, D)));
  }

  {
    Series conj_u = phi_at(t(1, 2), t(2, 3));
    Series u = conj_u * A_at(c.aplus, alpha[1], beta[2] + beta[3]) * inverse(conj_u);
    Series half = exp_series(t(1, 2).scaled(-c.lambda / 2));
    Series conj_v = phi_at(t(1, 2), t(1, 3));
    Series v = half * conj_v * A_at(c.aminus, alpha[2], beta[1] + beta[3]) *
               inverse(conj_v) * half;
    Series lhs = exp_series(t(1, 2).scaled(c.lambda));
    Series rhs = u * v * inverse(u) * inverse(v);
    report.results.push_back(eq_mod("commutator", table, lhs, rhs));
  }

  return report;
}

namespace {

// The three genus-zero defect series of exp(chi) at the given coupling,
// truncated at chi's order.
struct Defects {
  Series pentagon;  // reduced, over t(4)
  Series hexagon;   // over free(x,y)
  Series duality;   // over free(x,y)
};

Defects defects_of(const Series& chi, const Rat& lambda, const CheckOptions& opt) {
  int D = chi.maxdeg();
  AlphabetPtr f2 = phi_alphabet();
  Series phi = exp_series(chi);
  Defects out;
  {
    Family t4 = Family::t(4);
    AlphabetPtr alph = t4.alphabet();
    auto g = [&](int i, int j) { return gen_series(alph, D, tname(i, j)); };
    auto phi_at = [&](const Series& u, const Series& v) { return substitute(phi, {u, v}); };
    Series lhs = phi_at(g(2, 3), g(3, 4)) * phi_at(g(1, 2) + g(1, 3), g(2, 4) + g(3, 4)) *
                 phi_at(g(1, 2), g(2, 3));
    Series rhs = phi_at(g(1, 2), g(2, 3) + g(2, 4)) * phi_at(g(1, 3) + g(2, 3), g(3, 4));
    QuotientPtr table = shared_table(t4.presentation(), D, opt.monomial_cap, opt.cache_dir);
    out.pentagon = table->reduce(lhs - rhs);
  }
  {
    Series x = Series::gen(f2, D, "x");
    Series y = Series::gen(f2, D, "y");
    Series z = -x - y;
    Rat half = lambda / 2;
    out.hexagon = exp_series(x.scaled(half)) * substitute(phi, {y, x}) *
                      exp_series(y.scaled(half)) * substitute(phi, {z, y}) *
                      exp_series(z.scaled(half)) * substitute(phi, {x, z}) -
                  Series::one(f2, D);
  }
  out.duality = swap_xy(phi) * phi - Series::one(f2, D);
  return out;
}

using EqKey = std::pair<int, Monomial>;

std::map<EqKey, Rat> degree_vector(const Defects& d, int deg) {
  std::map<EqKey, Rat> v;
  auto put = [&](int eq, const Series& s) {
    for (const auto& [m, c] : s.terms())
      if (m.weight == deg) v[{eq, m}] = c;
  };
  put(0, d.pentagon);
  put(1, d.hexagon);
  put(2, d.duality);
  return v;
}

}  // namespace

SolveReport solve_drinfeld(const Rat& lambda, int maxdeg, const CheckOptions& opt) {
  AlphabetPtr f2 = phi_alphabet();
  SolveReport report;
  Series chi = Series::zero(f2, maxdeg);
  for (int d = 1; d <= maxdeg; ++d) {
    std::vector<Series> basis = lyndon_basis(f2, d, d);
    size_t k = basis.size();
    Series chi_low = chi.truncated(d);
    std::map<EqKey, Rat> base = degree_vector(defects_of(chi_low, lambda, opt), d);
    std::vector<std::map<EqKey, Rat>> cols;
    std::set<EqKey> keys;
    for (const auto& [key, val] : base) keys.insert(key);
    for (size_t i = 0; i < k; ++i) {
      std::map<EqKey, Rat> with = degree_vector(defects_of(chi_low + basis[i], lambda, opt), d);
      std::map<EqKey, Rat> col;
      for (const auto& [key, val] : with) col[key] += val;
      for (const auto& [key, val] : base) col[key] -= val;
      for (auto it = col.begin(); it != col.end();) {
        if (it->second == 0)
          it = col.erase(it);
        else {
          keys.insert(it->first);
          ++it;
        }
      }
      cols.push_back(std::move(col));
    }
    // Dense system: rows indexed by keys, k unknowns, rhs = -base.
    std::vector<std::vector<Rat>> rows;
    for (const EqKey& key : keys) {
      std::vector<Rat> row(k + 1, Rat(0));
      for (size_t i = 0; i < k; ++i) {
        auto it = cols[i].find(key);
        if (it != cols[i].end()) row[i] = it->second;
      }
      auto it = base.find(key);
      if (it != base.end()) row[k] = -it->second;
      rows.push_back(std::move(row));
    }
    // Exact Gaussian elimination.
    std::vector<int> pivot_of_col(k, -1);
    size_t rank = 0;
    for (size_t col = 0; col < k && rank < rows.size(); ++col) {
      size_t sel = rows.size();
      for (size_t r = rank; r < rows.size(); ++r)
        if (rows[r][col] != 0) {
          sel = r;
          break;
        }
      if (sel == rows.size()) continue;
      std::swap(rows[rank], rows[sel]);
      Rat inv = Rat(1) / rows[rank][col];
      for (size_t j = col; j <= k; ++j) rows[rank][j] *= inv;
      for (size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || rows[r][col] == 0) continue;
        Rat factor = rows[r][col];
        for (size_t j = col; j <= k; ++j) rows[r][j] -= factor * rows[rank][j];
      }
      pivot_of_col[col] = static_cast<int>(rank);
      ++rank;
    }
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r][k] != 0)
        throw std::runtime_error("no solution at degree " + std::to_string(d));
    std::vector<Rat> coeff(k, Rat(0));
    std::vector<size_t> free_cols;
    for (size_t col = 0; col < k; ++col) {
      if (pivot_of_col[col] < 0) {
        free_cols.push_back(col);
        continue;
      }
      coeff[col] = rows[static_cast<size_t>(pivot_of_col[col])][k];
    }
    if (!free_cols.empty()) {
      std::ostringstream note;
      note << "degree " << d << ": " << free_cols.size()
           << " free coordinate(s) set to zero at basis position(s)";
      for (size_t c : free_cols) note << " " << c;
      report.notes.push_back(note.str());
    }
    for (size_t i = 0; i < k; ++i) {
      if (coeff[i] == 0) continue;
      Series lifted = lyndon_bracket(f2, maxdeg, lyndon_words(f2, d)[i]);
      chi += lifted.scaled(coeff[i]);
    }
  }
  report.candidate.kind = Candidate::Kind::Drinfeld;
  report.candidate.lambda = lambda;
  report.candidate.phi = exp_series(chi);
  return report;
}

}  // namespace dk
