#include "dk/rational.hpp"

#include <stdexcept>

namespace dk {

Rat rat_parse(const std::string& text) {
  std::string::size_type slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto digits = [](std::string& s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (s.empty()) return false;
    std::string::size_type i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!digits(num) || !digits(den))
    throw std::invalid_argument("malformed rational: " + text);
  mpq_class value(num + "/" + den, 10);
  if (value.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  value.canonicalize();
  return value;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace dk
