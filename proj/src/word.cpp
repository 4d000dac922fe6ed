#include "ncsparse/word.hpp"

#include <algorithm>

namespace ncsparse {

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int x : letters) letters_.push_back(static_cast<Letter>(x));
}

bool Word::starts_with(const Word& prefix) const {
  return prefix.size() <= size() && letters_.compare(0, prefix.size(), prefix.letters_) == 0;
}

bool Word::ends_with(const Word& suffix) const {
  return suffix.size() <= size() &&
         letters_.compare(size() - suffix.size(), suffix.size(), suffix.letters_) == 0;
}

VariableTable::VariableTable(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() >= 0xFFFF) throw std::invalid_argument("too many variables");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!lookup_.emplace(n, static_cast<Letter>(i)).second)
      throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

Letter VariableTable::index(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) throw UnknownVariable(std::string(name));
  return it->second;
}

bool VariableTable::contains(std::string_view name) const {
  return lookup_.count(std::string(name)) != 0;
}

bool VariableTable::valid(const Word& w) const {
  return std::all_of(w.letters().begin(), w.letters().end(),
                     [&](Letter x) { return x < names_.size(); });
}

std::string VariableTable::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += names_.at(w[i]);
  }
  return out;
}

Word VariableTable::parse_word(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "1") return {};
  std::u16string letters;
  while (true) {
    auto star = text.find('*');
    letters.push_back(index(trim(text.substr(0, star))));
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
  }
  return Word(std::move(letters));
}

std::strong_ordering cmp_deglex(const Word& u, const Word& w, const VariableTable& vars) {
  if (!vars.valid(u) || !vars.valid(w)) throw std::invalid_argument("word not over the variable table");
  return cmp_deglex(u, w);
}

std::vector<Word> words_of_length(std::size_t nvars, std::size_t length) {
  std::vector<Word> out;
  if (nvars == 0) {
    if (length == 0) out.emplace_back();
    return out;
  }
  std::u16string cur(length, Letter{0});
  while (true) {
    out.emplace_back(cur);
    std::size_t i = length;
    while (i > 0 && cur[i - 1] + 1u == nvars) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

}  // namespace ncsparse
