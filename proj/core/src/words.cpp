#include <cctype>
#include <sstream>
#include <stdexcept>

#include "dk/group.hpp"

namespace dk {

Word Word::parse(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto caret = tok.find('^');
    std::string gen = tok.substr(0, caret);
    if (gen.empty() || (!std::isalpha(static_cast<unsigned char>(gen[0])) && gen[0] != '_'))
      throw std::invalid_argument("malformed word token: " + tok);
    for (char c : gen)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw std::invalid_argument("malformed word token: " + tok);
    Rat e(1);
    if (caret != std::string::npos) {
      std::string exp = tok.substr(caret + 1);
      if (exp.empty()) throw std::invalid_argument("empty exponent in: " + tok);
      e = rat_parse(exp);
    }
    w.factors.emplace_back(gen, e);
  }
  return w;
}

std::string Word::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out << " ";
    out << factors[i].first;
    if (factors[i].second != 1) out << "^" << rat_str(factors[i].second);
  }
  return out.str();
}

}  // namespace dk
