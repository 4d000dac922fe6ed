#include "ncsparse/parse.hpp"

#include <cctype>

namespace ncsparse {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VariableTable& vars) : text_(text), vars_(vars) {}

  NcPoly parse() {
    NcPoly f = poly();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NcPoly poly() {
    NcPoly f;
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    f = term();
    if (negate) f *= -1;
    while (true) {
      if (accept('+'))
        f += term();
      else if (accept('-'))
        f -= term();
      else
        break;
    }
    return f;
  }

  NcPoly term() {
    NcPoly f = factor();
    while (accept('*')) f = f * factor();
    return f;
  }

  NcPoly factor() {
    NcPoly base = atom();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (e == 0) fail("exponent must be positive");
    if (e > 4096) fail("exponent too large");
    NcPoly r = base;
    for (unsigned long k = 1; k < e; ++k) r = r * base;
    return r;
  }

  NcPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NcPoly f = poly();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return NcPoly::constant(coeff());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (!vars_.contains(name)) {
        pos_ = start;
        throw UnknownVariable(name);
      }
      return NcPoly::monomial(Word(std::u16string(1, vars_.index(name))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Rational coeff() {
    mpz_class num = integer();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      mpz_class den = integer();
      if (den == 0) fail("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::string_view text_;
  const VariableTable& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

NcPoly parse_poly(std::string_view text, const VariableTable& vars) {
  return PolyParser(text, vars).parse();
}

std::string format_poly(const NcPoly& f, const VariableTable& vars) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool neg = t.coeff < 0;
    Rational mag = neg ? Rational(-t.coeff) : t.coeff;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (t.word.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += vars.format(t.word);
    }
  }
  return out;
}

}  // namespace ncsparse
