#include "dk/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dk/group.hpp"

namespace dk {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

struct Cursor {
  std::vector<std::string> lines;
  size_t pos = 0;

  bool done() const { return pos >= lines.size(); }
  const std::string& peek() const {
    if (done()) throw std::runtime_error("unexpected end of input");
    return lines[pos];
  }
  std::string next() {
    std::string line = peek();
    ++pos;
    return line;
  }
  void skip_blank() {
    while (!done() && lines[pos].empty()) ++pos;
  }
};

// Splits "key value" on the first space and checks the key.
std::string expect_kv(Cursor& cur, const std::string& key) {
  cur.skip_blank();
  std::string line = cur.next();
  size_t sp = line.find(' ');
  if (sp == std::string::npos || line.substr(0, sp) != key)
    throw std::runtime_error("expected '" + key + " ...' line, got '" + line + "'");
  return line.substr(sp + 1);
}

Monomial parse_monomial(const AlphabetPtr& alph, const std::string& text) {
  if (text == "1") return mono_of(alph, {});
  std::vector<std::uint16_t> idx;
  std::string name;
  auto flush = [&]() {
    if (name.empty()) throw std::runtime_error("empty generator name in monomial '" + text + "'");
    idx.push_back(static_cast<std::uint16_t>(alph->index_checked(name)));
    name.clear();
  };
  for (char ch : text) {
    if (ch == '.')
      flush();
    else
      name += ch;
  }
  flush();
  return mono_of(alph, idx);
}

std::string monomial_str(const AlphabetPtr& alph, const Monomial& m) {
  if (m.idx.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < m.idx.size(); ++i) {
    if (i) out += '.';
    out += alph->name(m.idx[i]);
  }
  return out;
}

Series parse_series_at(Cursor& cur) {
  AlphabetPtr alph = alphabet_for_key(expect_kv(cur, "alphabet"));
  int maxdeg = 0;
  {
    std::string v = expect_kv(cur, "maxdeg");
    try {
      size_t used = 0;
      maxdeg = std::stoi(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
    } catch (const std::exception&) {
      throw std::runtime_error("bad maxdeg '" + v + "'");
    }
    if (maxdeg < 0) throw std::runtime_error("maxdeg must be >= 0");
  }
  Series s = Series::zero(alph, maxdeg);
  while (!cur.done()) {
    const std::string& line = cur.peek();
    if (line.empty() || line.back() == ':') break;
    cur.next();
    size_t sp = line.find(' ');
    if (sp == std::string::npos)
      throw std::runtime_error("term line needs '<rational> <monomial>': '" + line + "'");
    Rat c = rat_parse(line.substr(0, sp));
    Monomial m = parse_monomial(alph, line.substr(sp + 1));
    if (m.weight > maxdeg)
      throw std::runtime_error("term above maxdeg: '" + line + "'");
    s.add_term(m, c);
  }
  return s;
}

void require_block(Cursor& cur, const std::string& name) {
  cur.skip_blank();
  std::string line = cur.next();
  if (line != name + ":")
    throw std::runtime_error("expected block '" + name + ":', got '" + line + "'");
}

void series_block(std::ostringstream& out, const std::string& name, const Series& s) {
  out << name << ":\n" << series_str(s);
}

// "cyclotomic(3)" -> 3; plain -> 0 if no parenthesized argument.
int paren_arg(const std::string& text, const std::string& head) {
  if (text == head) return 0;
  if (text.size() > head.size() + 2 && text.compare(0, head.size() + 1, head + "(") == 0 &&
      text.back() == ')') {
    std::string inner = text.substr(head.size() + 1, text.size() - head.size() - 2);
    try {
      size_t used = 0;
      int v = std::stoi(inner, &used);
      if (used == inner.size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return -1;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& head) {
  std::string want = head + "(";
  if (text.compare(0, want.size(), want) != 0 || text.back() != ')')
    throw std::runtime_error("expected " + head + "(...), got '" + text + "'");
  std::string inner = text.substr(want.size(), text.size() - want.size() - 1);
  std::vector<int> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw std::runtime_error("empty entry in '" + text + "'");
    size_t used = 0;
    out.push_back(std::stoi(cur, &used));
    if (used != cur.size()) throw std::runtime_error("bad entry in '" + text + "'");
    cur.clear();
  };
  for (char ch : inner) {
    if (ch == ',')
      flush();
    else if (ch != ' ')
      cur += ch;
  }
  flush();
  return out;
}

}  // namespace

AlphabetPtr alphabet_for_key(const std::string& key) {
  return Family::parse(key).alphabet();
}

std::string series_str(const Series& s) {
  std::ostringstream out;
  out << "alphabet " << s.alphabet()->key() << "\n";
  out << "maxdeg " << s.maxdeg() << "\n";
  for (const auto& [m, c] : s.terms())
    out << rat_str(c) << " " << monomial_str(s.alphabet(), m) << "\n";
  return out.str();
}

Series parse_series(const std::string& text) {
  Cursor cur{split_lines(text)};
  Series s = parse_series_at(cur);
  cur.skip_blank();
  if (!cur.done()) throw std::runtime_error("trailing content after series: '" + cur.peek() + "'");
  return s;
}

std::string candidate_str(const Candidate& c) {
  std::ostringstream out;
  out << "candidate ";
  switch (c.kind) {
    case Candidate::Kind::Drinfeld:
      out << "drinfeld";
      break;
    case Candidate::Kind::Cyclotomic:
      out << "cyclotomic(" << c.N << ")";
      break;
    case Candidate::Kind::Elliptic:
      out << "elliptic";
      break;
  }
  out << "\n";
  out << "lambda " << rat_str(c.lambda) << "\n";
  series_block(out, "phi", c.phi);
  if (c.kind == Candidate::Kind::Cyclotomic) series_block(out, "psi", c.psi);
  if (c.kind == Candidate::Kind::Elliptic) {
    series_block(out, "aplus", c.aplus);
    series_block(out, "aminus", c.aminus);
  }
  return out.str();
}

Candidate parse_candidate(const std::string& text) {
  Cursor cur{split_lines(text)};
  std::string kind = expect_kv(cur, "candidate");
  Candidate c;
  if (kind == "drinfeld") {
    c.kind = Candidate::Kind::Drinfeld;
  } else if (int n = paren_arg(kind, "cyclotomic"); n >= 1) {
    c.kind = Candidate::Kind::Cyclotomic;
    c.N = n;
  } else if (kind == "elliptic") {
    c.kind = Candidate::Kind::Elliptic;
  } else {
    throw std::runtime_error("unknown candidate kind '" + kind + "'");
  }
  c.lambda = rat_parse(expect_kv(cur, "lambda"));
  require_block(cur, "phi");
  c.phi = parse_series_at(cur);
  if (!same_alphabet(c.phi.alphabet(), phi_alphabet()))
    throw std::runtime_error("phi block must use alphabet free(x,y)");
  if (c.kind == Candidate::Kind::Cyclotomic) {
    require_block(cur, "psi");
    c.psi = parse_series_at(cur);
    if (!same_alphabet(c.psi.alphabet(), psi_alphabet(c.N)))
      throw std::runtime_error("psi block alphabet does not match N=" + std::to_string(c.N));
    if (c.psi.maxdeg() != c.phi.maxdeg())
      throw std::runtime_error("psi and phi maxdeg differ");
  }
  if (c.kind == Candidate::Kind::Elliptic) {
    require_block(cur, "aplus");
    c.aplus = parse_series_at(cur);
    require_block(cur, "aminus");
    c.aminus = parse_series_at(cur);
    if (!same_alphabet(c.aplus.alphabet(), ab_alphabet()) ||
        !same_alphabet(c.aminus.alphabet(), ab_alphabet()))
      throw std::runtime_error("aplus/aminus blocks must use alphabet free(a,b)");
    if (c.aplus.maxdeg() != c.phi.maxdeg() || c.aminus.maxdeg() != c.phi.maxdeg())
      throw std::runtime_error("aplus/aminus and phi maxdeg differ");
  }
  cur.skip_blank();
  if (!cur.done())
    throw std::runtime_error("trailing content after candidate: '" + cur.peek() + "'");
  return c;
}

GtAny gt_any(const GtElement& e) {
  GtAny a;
  a.kind = GtAny::Kind::Gt;
  a.gt = e;
  return a;
}

GtAny gt_any(const GtGammaElement& e) {
  GtAny a;
  a.kind = GtAny::Kind::GtGamma;
  a.gamma = e;
  return a;
}

GtAny gt_any(const GtEllElement& e) {
  GtAny a;
  a.kind = GtAny::Kind::GtEll;
  a.ell = e;
  return a;
}

std::string gt_str(const GtAny& e) {
  std::ostringstream out;
  switch (e.kind) {
    case GtAny::Kind::Gt:
      out << "element gt\n";
      out << "mu " << rat_str(e.gt.mu) << "\n";
      series_block(out, "f", e.gt.f);
      break;
    case GtAny::Kind::GtGamma:
      out << "element gtgamma(" << e.gamma.N << ")\n";
      out << "mu " << rat_str(e.gamma.mu) << "\n";
      series_block(out, "f", e.gamma.f);
      series_block(out, "g", e.gamma.g);
      break;
    case GtAny::Kind::GtEll:
      out << "element gtell\n";
      out << "mu " << rat_str(e.ell.mu) << "\n";
      series_block(out, "f", e.ell.f);
      series_block(out, "gplus", e.ell.gplus);
      series_block(out, "gminus", e.ell.gminus);
      break;
  }
  return out.str();
}

GtAny parse_gt(const std::string& text) {
  Cursor cur{split_lines(text)};
  std::string kind = expect_kv(cur, "element");
  GtAny e;
  auto read_f = [&]() {
    require_block(cur, "f");
    Series f = parse_series_at(cur);
    if (!same_alphabet(f.alphabet(), phi_alphabet()))
      throw std::runtime_error("f block must use alphabet free(x,y)");
    return f;
  };
  if (kind == "gt") {
    e.kind = GtAny::Kind::Gt;
    e.gt.mu = rat_parse(expect_kv(cur, "mu"));
    e.gt.f = read_f();
  } else if (int n = paren_arg(kind, "gtgamma"); n >= 1) {
    e.kind = GtAny::Kind::GtGamma;
    e.gamma.N = n;
    e.gamma.mu = rat_parse(expect_kv(cur, "mu"));
    e.gamma.f = read_f();
    require_block(cur, "g");
    e.gamma.g = parse_series_at(cur);
    if (!same_alphabet(e.gamma.g.alphabet(), rel_alphabet(n)))
      throw std::runtime_error("g block alphabet does not match N=" + std::to_string(n));
    if (e.gamma.g.maxdeg() != e.gamma.f.maxdeg())
      throw std::runtime_error("g and f maxdeg differ");
  } else if (kind == "gtell") {
    e.kind = GtAny::Kind::GtEll;
    e.ell.mu = rat_parse(expect_kv(cur, "mu"));
    e.ell.f = read_f();
    require_block(cur, "gplus");
    e.ell.gplus = parse_series_at(cur);
    require_block(cur, "gminus");
    e.ell.gminus = parse_series_at(cur);
    if (!same_alphabet(e.ell.gplus.alphabet(), gtell_alphabet()) ||
        !same_alphabet(e.ell.gminus.alphabet(), gtell_alphabet()))
      throw std::runtime_error("gplus/gminus blocks must use alphabet free(A,B)");
    if (e.ell.gplus.maxdeg() != e.ell.f.maxdeg() ||
        e.ell.gminus.maxdeg() != e.ell.f.maxdeg())
      throw std::runtime_error("gplus/gminus and f maxdeg differ");
  } else {
    throw std::runtime_error("unknown element kind '" + kind + "'");
  }
  cur.skip_blank();
  if (!cur.done())
    throw std::runtime_error("trailing content after element: '" + cur.peek() + "'");
  return e;
}

std::vector<int> parse_perm(const std::string& text) { return parse_int_list(text, "perm"); }

std::vector<int> parse_gamma(const std::string& text) { return parse_int_list(text, "gamma"); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace dk
