#include "dk/alphabet.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace dk {

Alphabet::Alphabet(std::string key, std::vector<Letter> letters)
    : key_(std::move(key)), letters_(std::move(letters)) {
  // An empty alphabet is legal (arity-1 strand families); its series are
  // constants.
  min_weight_ = letters_.empty() ? 1 : letters_[0].weight;
  for (size_t i = 0; i < letters_.size(); ++i) {
    const Letter& l = letters_[i];
    if (l.weight < 1) throw std::invalid_argument("letter weight must be >= 1: " + l.name);
    min_weight_ = std::min(min_weight_, l.weight);
    by_name_.emplace_back(l.name, static_cast<int>(i));
  }
  std::sort(by_name_.begin(), by_name_.end());
  for (size_t i = 1; i < by_name_.size(); ++i)
    if (by_name_[i - 1].first == by_name_[i].first)
      throw std::invalid_argument("duplicate letter " + by_name_[i].first + " in " + key_);
}

int Alphabet::index(const std::string& name) const {
  auto it = std::lower_bound(by_name_.begin(), by_name_.end(),
                             std::make_pair(name, -1));
  if (it != by_name_.end() && it->first == name) return it->second;
  return -1;
}

int Alphabet::index_checked(const std::string& name) const {
  int i = index(name);
  if (i < 0) throw std::invalid_argument("no generator " + name + " in " + key_);
  return i;
}

AlphabetPtr Alphabet::make(const std::string& key, std::vector<Letter> letters) {
  static std::mutex mu;
  static std::map<std::string, AlphabetPtr>* registry = new std::map<std::string, AlphabetPtr>;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry->find(key);
  if (it != registry->end()) {
    const Alphabet& have = *it->second;
    bool ok = have.size() == static_cast<int>(letters.size());
    for (int i = 0; ok && i < have.size(); ++i)
      ok = have.letter(i).name == letters[static_cast<size_t>(i)].name &&
           have.letter(i).weight == letters[static_cast<size_t>(i)].weight;
    if (!ok) throw std::invalid_argument("alphabet key reused with different letters: " + key);
    return it->second;
  }
  AlphabetPtr made(new Alphabet(key, std::move(letters)));
  (*registry)[key] = made;
  return made;
}

}  // namespace dk
