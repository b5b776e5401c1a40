#include "dk/fin_map.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dk {

namespace {
std::vector<int> parse_block(const std::string& block) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty() || cur == "\xE2\x88\x85") {  // empty set sign
      cur.clear();
      return;
    }
    if (cur.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed pmap entry: " + cur);
    out.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : block) {
    if (c == ',')
      flush();
    else if (!std::isspace(static_cast<unsigned char>(c)))
      cur.push_back(c);
  }
  flush();
  return out;
}
}  // namespace

PMap PMap::parse(const std::string& text) {
  const std::string head = "pmap(";
  if (text.rfind(head, 0) != 0 || text.back() != ')')
    throw std::invalid_argument("malformed pmap: " + text);
  std::string inner = text.substr(head.size(), text.size() - head.size() - 1);
  auto colon = inner.find(':');
  auto arrow = inner.find("<-");
  if (colon == std::string::npos || arrow == std::string::npos || arrow > colon)
    throw std::invalid_argument("malformed pmap: " + text);
  auto as_int = [&](std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed pmap arity in: " + text);
    return std::stoi(s);
  };
  PMap f;
  f.n = as_int(inner.substr(0, arrow));
  f.m = as_int(inner.substr(arrow + 2, colon - arrow - 2));
  f.img.assign(static_cast<size_t>(f.m), -1);
  std::string body = inner.substr(colon + 1);
  std::vector<int> zero_block;
  auto semi = body.find(';');
  if (semi != std::string::npos) {
    zero_block = parse_block(body.substr(0, semi));
    body = body.substr(semi + 1);
  }
  std::vector<std::string> blocks;
  std::string cur;
  for (char c : body) {
    if (c == '|') {
      blocks.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  blocks.push_back(cur);
  if (static_cast<int>(blocks.size()) != f.n)
    throw std::invalid_argument("pmap needs " + std::to_string(f.n) + " blocks: " + text);
  auto assign = [&](int element, int value) {
    if (element < 1 || element > f.m)
      throw std::invalid_argument("pmap element out of range: " + std::to_string(element));
    if (f.img[static_cast<size_t>(element - 1)] != -1)
      throw std::invalid_argument("pmap element listed twice: " + std::to_string(element));
    f.img[static_cast<size_t>(element - 1)] = value;
  };
  for (int e : zero_block) assign(e, 0);
  for (int j = 1; j <= f.n; ++j)
    for (int e : parse_block(blocks[static_cast<size_t>(j - 1)])) assign(e, j);
  return f;
}

std::string PMap::str() const {
  std::ostringstream out;
  out << "pmap(" << n << "<-" << m << ": ";
  if (hits_zero()) {
    auto z = preimage(0);
    for (size_t i = 0; i < z.size(); ++i) out << (i ? "," : "") << z[i];
    out << "; ";
  }
  for (int j = 1; j <= n; ++j) {
    if (j > 1) out << "|";
    auto block = preimage(j);
    for (size_t i = 0; i < block.size(); ++i) out << (i ? "," : "") << block[i];
  }
  out << ")";
  return out.str();
}

std::vector<int> PMap::preimage(int j) const {
  std::vector<int> out;
  for (int i = 1; i <= m; ++i)
    if (img[static_cast<size_t>(i - 1)] == j) out.push_back(i);
  return out;
}

bool PMap::hits_zero() const {
  return std::find(img.begin(), img.end(), 0) != img.end();
}

void PMap::validate() const {
  if (m < 0 || n < 0 || static_cast<int>(img.size()) != m)
    throw std::invalid_argument("inconsistent pmap");
  for (int v : img)
    if (v < -1 || v > n) throw std::invalid_argument("pmap image out of range");
}

PMap compose_pmap(const PMap& f, const PMap& g, int zero_to) {
  if (f.n != g.m) throw std::invalid_argument("pmap arity mismatch in composition");
  PMap h;
  h.m = f.m;
  h.n = g.n;
  h.img.assign(static_cast<size_t>(h.m), -1);
  for (int i = 1; i <= f.m; ++i) {
    int v = f.img[static_cast<size_t>(i - 1)];
    int w = -1;
    if (v == 0)
      w = zero_to;
    else if (v > 0)
      w = g.img[static_cast<size_t>(v - 1)];
    h.img[static_cast<size_t>(i - 1)] = w;
  }
  return h;
}

PMap contraction_map(int n, int p, int m) {
  if (p < 1 || p > n || m < 0) throw std::invalid_argument("bad contraction parameters");
  PMap f;
  f.m = n + m - 1;
  f.n = n;
  f.img.assign(static_cast<size_t>(f.m), -1);
  for (int k = 1; k <= f.m; ++k) {
    int v;
    if (k < p)
      v = k;
    else if (k <= p + m - 1)
      v = p;
    else
      v = k - m + 1;
    f.img[static_cast<size_t>(k - 1)] = v;
  }
  return f;
}

PMap slot_map(int n, int p, int m) {
  if (p < 1 || p > n || m < 0) throw std::invalid_argument("bad slot parameters");
  PMap f;
  f.m = n + m - 1;
  f.n = m;
  f.img.assign(static_cast<size_t>(f.m), -1);
  for (int k = p; k <= p + m - 1; ++k) f.img[static_cast<size_t>(k - 1)] = k - p + 1;
  return f;
}

PMap stack_host_map(int n, int m) {
  PMap f;
  f.m = n + m;
  f.n = n;
  f.img.assign(static_cast<size_t>(f.m), -1);
  for (int k = 1; k <= m; ++k) f.img[static_cast<size_t>(k - 1)] = 0;
  for (int k = m + 1; k <= n + m; ++k) f.img[static_cast<size_t>(k - 1)] = k - m;
  return f;
}

PMap stack_guest_map(int n, int m) {
  PMap f;
  f.m = n + m;
  f.n = m;
  f.img.assign(static_cast<size_t>(f.m), -1);
  for (int k = 1; k <= m; ++k) f.img[static_cast<size_t>(k - 1)] = k;
  return f;
}

}  // namespace dk
