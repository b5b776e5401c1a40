#include "dk/gt.hpp"

#include <stdexcept>

#include "dk/group.hpp"

namespace dk {

namespace {

Series swap_xy(const Series& f) {
  AlphabetPtr alph = f.alphabet();
  int D = f.maxdeg();
  return substitute(f, {Series::gen(alph, D, "y"), Series::gen(alph, D, "x")});
}

void require_f2(const Series& f) {
  if (!same_alphabet(f.alphabet(), phi_alphabet()))
    throw std::invalid_argument("f must live over free(x,y)");
}

void require_same_maxdeg(int a, int b) {
  if (a != b) throw std::invalid_argument("maxdeg mismatch");
}

// f-part of every composition law: f1(x^mu2, f2 y^mu2 (swap f2)) f2.
Series compose_f(const Series& f1, const Series& f2, const Rat& mu2) {
  AlphabetPtr alph = f1.alphabet();
  int D = f1.maxdeg();
  Series y = Series::gen(alph, D, "y");
  Series inner = f2 * exp_series(y.scaled(mu2)) * swap_xy(f2);
  return substitute(f1, {Series::gen(alph, D, "x").scaled(mu2), log_series(inner)}) * f2;
}

// f-part of an action with the given exponent: f(e^{s x}, phi e^{s y} (swap phi)) phi.
Series act_f(const Series& f, const Series& phi, const Rat& s) {
  AlphabetPtr alph = phi.alphabet();
  int D = phi.maxdeg();
  Series inner = phi * exp_series(Series::gen(alph, D, "y").scaled(s)) * swap_xy(phi);
  return substitute(f, {Series::gen(alph, D, "x").scaled(s), log_series(inner)}) * phi;
}

// Clean letter shift on free(X,Y0..Y{N-1}): Yj -> Y{j+1}, with the top letter
// wrapping to the exp(X)-conjugate of Y0; X is fixed.
Series shift_wrap(const Series& s, int N) {
  AlphabetPtr alph = s.alphabet();
  int D = s.maxdeg();
  Series X = Series::gen(alph, D, "X");
  std::vector<Series> images{X};
  for (int j = 0; j < N; ++j) {
    if (j + 1 < N)
      images.push_back(Series::gen(alph, D, "Y" + std::to_string(j + 1)));
    else
      images.push_back(exp_series(X) * Series::gen(alph, D, "Y0") * exp_series(-X));
  }
  return substitute(s, images);
}

Series conj_by(const Series& s, const Series& grp) { return grp * s * inverse(grp); }

EquationResult line_of(const std::string& name, const Series& diff, int checked_deg) {
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

EquationResult grouplike_line(const std::string& name, const Series& s) {
  EquationResult r;
  r.name = name;
  TensorSeries diff = coproduct(s) - tensor_of(s, s);
  if (s.constant_term() == 1 && diff.is_zero()) {
    r.pass = true;
    r.degree = s.maxdeg();
    r.residual_terms = 0;
    return r;
  }
  r.pass = false;
  if (s.constant_term() != 1) {
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

}  // namespace

AlphabetPtr gtell_alphabet() { return Alphabet::make("free(A,B)", {{"A", 1}, {"B", 1}}); }

GtElement gt_identity(int maxdeg) { return {Rat(1), Series::one(phi_alphabet(), maxdeg)}; }

GtGammaElement gtgamma_identity(int N, int maxdeg) {
  return {Rat(1), Series::one(phi_alphabet(), maxdeg),
          Series::one(rel_alphabet(N), maxdeg), N};
}

GtEllElement gtell_identity(int maxdeg) {
  AlphabetPtr alph = gtell_alphabet();
  return {Rat(1), Series::one(phi_alphabet(), maxdeg),
          exp_series(Series::gen(alph, maxdeg, "A")),
          exp_series(Series::gen(alph, maxdeg, "B"))};
}

Series group_pair_subst(const Series& f, const Series& first, const Series& second) {
  return substitute(f, {log_series(first), log_series(second)});
}

GtElement gt_compose(const GtElement& a, const GtElement& b) {
  require_f2(a.f);
  require_f2(b.f);
  require_same_maxdeg(a.f.maxdeg(), b.f.maxdeg());
  if (a.mu == 0 || b.mu == 0) throw std::invalid_argument("mu must be nonzero");
  return {a.mu * b.mu, compose_f(a.f, b.f, b.mu)};
}

GtGammaElement gtgamma_compose(const GtGammaElement& a, const GtGammaElement& b,
                               GtGammaSlots slots) {
  require_f2(a.f);
  require_f2(b.f);
  if (a.N != b.N) throw std::invalid_argument("N mismatch");
  require_same_maxdeg(a.f.maxdeg(), b.f.maxdeg());
  require_same_maxdeg(a.g.maxdeg(), b.g.maxdeg());
  if (!same_alphabet(a.g.alphabet(), rel_alphabet(a.N)))
    throw std::invalid_argument("g must live over the X,Y slot alphabet");
  int N = a.N;
  int D = a.g.maxdeg();
  AlphabetPtr alph = a.g.alphabet();
  Series X = Series::gen(alph, D, "X");
  Rat mu2 = b.mu;
  std::vector<Series> images;
  if (slots == GtGammaSlots::Power) {
    images.push_back(X.scaled(mu2));
    Series base = b.g * Series::gen(alph, D, "Y0").scaled(mu2) * inverse(b.g);
    Series shifted = base;
    for (int s = 0; s < N; ++s) {
      Series C = exp_series(X.scaled(Rat(s) * (mu2 - 1) / N));
      images.push_back(conj_by(shifted, C));
      if (s + 1 < N) shifted = shift_wrap(shifted, N);
    }
  } else {
    images.push_back(X.scaled((mu2 - 1) / N));
    for (int s = 0; s < N; ++s) {
      std::vector<Series> rot{X};
      for (int j = 0; j < N; ++j)
        rot.push_back(Series::gen(alph, D, "Y" + std::to_string((j + s) % N)));
      Series g2s = substitute(b.g, rot);
      Series inner = g2s * Series::gen(alph, D, "Y" + std::to_string(s)).scaled(mu2) *
                     inverse(g2s);
      Series C = exp_series(X.scaled(Rat(s) * (mu2 - 1) / (Rat(N) * N)));
      images.push_back(conj_by(inner, C));
    }
  }
  Series g12 = substitute(a.g, images) * b.g;
  return {a.mu * b.mu, compose_f(a.f, b.f, mu2), g12, N};
}

GtEllElement gtell_compose(const GtEllElement& a, const GtEllElement& b) {
  require_f2(a.f);
  require_f2(b.f);
  require_same_maxdeg(a.f.maxdeg(), b.f.maxdeg());
  require_same_maxdeg(a.gplus.maxdeg(), b.gplus.maxdeg());
  if (!same_alphabet(a.gplus.alphabet(), gtell_alphabet()) ||
      !same_alphabet(a.gminus.alphabet(), gtell_alphabet()))
    throw std::invalid_argument("gplus/gminus must live over free(A,B)");
  Series lp = log_series(b.gplus);
  Series lm = log_series(b.gminus);
  return {a.mu * b.mu, compose_f(a.f, b.f, b.mu), substitute(a.gplus, {lp, lm}),
          substitute(a.gminus, {lp, lm})};
}

CheckReport verify_gt(const GtElement& a) {
  require_f2(a.f);
  int D = a.f.maxdeg();
  AlphabetPtr alph = a.f.alphabet();
  CheckReport report;
  report.results.push_back(grouplike_line("grouplike", a.f));
  report.results.push_back(
      line_of("duality", a.f * swap_xy(a.f) - Series::one(alph, D), D));
  {
    Series x = Series::gen(alph, D, "x");
    Series y = Series::gen(alph, D, "y");
    Series logz = bch(-y, -x);
    Rat nu = (a.mu - 1) / 2;
    Series prod = exp_series(x.scaled(nu)) * a.f * exp_series(y.scaled(nu)) *
                  substitute(a.f, {y, logz}) * exp_series(logz.scaled(nu)) *
                  substitute(a.f, {logz, x});
    report.results.push_back(line_of("triple", prod - Series::one(alph, D), D));
  }
  report.notes.push_back(
      "four_strand not checked (no finite model for the four-strand relation here)");
  return report;
}

Candidate gt_act(const GtElement& a, const Candidate& c) {
  if (c.kind != Candidate::Kind::Drinfeld)
    throw std::invalid_argument("gt elements act on genus-zero candidates");
  require_f2(a.f);
  require_same_maxdeg(a.f.maxdeg(), c.maxdeg());
  Candidate out;
  out.kind = Candidate::Kind::Drinfeld;
  out.lambda = a.mu * c.lambda;
  out.phi = act_f(a.f, c.phi, a.mu);
  return out;
}

Candidate gtgamma_act(const GtGammaElement& a, const Candidate& c) {
  if (c.kind != Candidate::Kind::Cyclotomic)
    throw std::invalid_argument("gtgamma elements act on cyclotomic candidates");
  if (a.N != c.N) throw std::invalid_argument("N mismatch");
  require_f2(a.f);
  require_same_maxdeg(a.f.maxdeg(), c.maxdeg());
  require_same_maxdeg(a.g.maxdeg(), c.psi.maxdeg());
  int N = a.N;
  int D = c.psi.maxdeg();
  AlphabetPtr alph = c.psi.alphabet();
  Series u = Series::gen(alph, D, "u");
  const Rat& lam = c.lambda;
  std::vector<Series> images{u.scaled(lam)};
  for (int s = 0; s < N; ++s) {
    std::vector<Series> rot{u};
    for (int j = 0; j < N; ++j)
      rot.push_back(Series::gen(alph, D, "w" + std::to_string((j + s) % N)));
    Series psi_s = substitute(c.psi, rot);
    Series inner =
        psi_s * Series::gen(alph, D, "w" + std::to_string(s)).scaled(lam) * inverse(psi_s);
    Series C = exp_series(u.scaled(Rat(s) * lam / N));
    images.push_back(conj_by(inner, C));
  }
  Candidate out;
  out.kind = Candidate::Kind::Cyclotomic;
  out.N = N;
  out.lambda = a.mu * c.lambda;
  out.phi = act_f(a.f, c.phi, lam);
  out.psi = c.psi * substitute(a.g, images);
  return out;
}

Candidate gtell_act(const GtEllElement& a, const Candidate& c) {
  if (c.kind != Candidate::Kind::Elliptic)
    throw std::invalid_argument("gtell elements act on elliptic candidates");
  require_f2(a.f);
  require_same_maxdeg(a.f.maxdeg(), c.maxdeg());
  require_same_maxdeg(a.gplus.maxdeg(), c.aplus.maxdeg());
  Series lp = log_series(c.aplus);
  Series lm = log_series(c.aminus);
  Candidate out;
  out.kind = Candidate::Kind::Elliptic;
  out.lambda = a.mu * c.lambda;
  out.phi = act_f(a.f, c.phi, c.lambda);
  out.aplus = substitute(a.gplus, {lp, lm});
  out.aminus = substitute(a.gminus, {lp, lm});
  return out;
}

}  // namespace dk
