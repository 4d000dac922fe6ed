#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ncsparse {

/// Variable index; x_1 < x_2 < ... is the order of declaration.
using Letter = char16_t;

/// A monomial of the free monoid: a sequence of variable indices.
/// Backed by a u16string so short words (the common case) stay inline.
class Word {
 public:
  Word() = default;
  explicit Word(std::u16string letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<int> letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::u16string& letters() const { return letters_; }

  Word substr(std::size_t pos, std::size_t len = std::u16string::npos) const {
    return Word(letters_.substr(pos, len));
  }
  bool starts_with(const Word& prefix) const;
  bool ends_with(const Word& suffix) const;

  Word& operator*=(const Word& rhs) {
    letters_ += rhs.letters_;
    return *this;
  }
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::u16string letters_;
};

/// Degree-lexicographic comparison: length first, then left-to-right by variable index.
inline std::strong_ordering cmp_deglex(const Word& u, const Word& w) {
  if (u.size() != w.size()) return u.size() <=> w.size();
  int c = u.letters().compare(w.letters());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

struct DeglexLess {
  bool operator()(const Word& u, const Word& w) const { return cmp_deglex(u, w) < 0; }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::u16string>{}(w.letters());
  }
};

class UnknownVariable : public std::invalid_argument {
 public:
  explicit UnknownVariable(const std::string& name)
      : std::invalid_argument("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Ordered, distinct variable names.
class VariableTable {
 public:
  VariableTable() = default;
  explicit VariableTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter x) const { return names_.at(x); }
  const std::vector<std::string>& names() const { return names_; }
  /// Throws UnknownVariable.
  Letter index(std::string_view name) const;
  bool contains(std::string_view name) const;

  /// True iff every letter is a declared variable.
  bool valid(const Word& w) const;

  /// "x*y*x"; the empty word is "1".
  std::string format(const Word& w) const;
  /// Inverse of format; also accepts "" for the empty word.
  Word parse_word(std::string_view text) const;

  friend bool operator==(const VariableTable& a, const VariableTable& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> lookup_;
};

/// Ordering on words over a variable table. Only deglex is provided.
std::strong_ordering cmp_deglex(const Word& u, const Word& w, const VariableTable& vars);

/// All words of exactly the given length, in lex order.
std::vector<Word> words_of_length(std::size_t nvars, std::size_t length);

}  // namespace ncsparse
