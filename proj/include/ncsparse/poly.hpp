#pragma once

#include "ncsparse/rational.hpp"
#include "ncsparse/word.hpp"

#include <stdexcept>
#include <vector>

namespace ncsparse {

struct Term {
  Word word;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

class ZeroPolynomial : public std::domain_error {
 public:
  ZeroPolynomial() : std::domain_error("operation undefined for the zero polynomial") {}
};

/// Noncommutative polynomial over Q.
///
/// Terms are kept sorted by strictly decreasing deglex order with no zero
/// coefficients, so the leading term is terms().front(). Left and right
/// multiplication by a word preserves that order.
class NcPoly {
 public:
  NcPoly() = default;
  static NcPoly constant(const Rational& c);
  static NcPoly monomial(Word w, const Rational& c = 1);
  /// Sorts, merges duplicate words and drops zero coefficients.
  static NcPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Word& lm() const;
  const Rational& lc() const;
  /// deg(0) = -1.
  int deg() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().word.size()); }
  int degmin() const;
  Rational coeff(const Word& w) const;

  /// a * this * b
  NcPoly multiplied(const Word& left, const Word& right) const;
  /// this += c * a * g * b
  void add_scaled(const NcPoly& g, const Rational& c, const Word& left, const Word& right);

  NcPoly& operator+=(const NcPoly& g) { add_scaled(g, 1, {}, {}); return *this; }
  NcPoly& operator-=(const NcPoly& g) { add_scaled(g, -1, {}, {}); return *this; }
  NcPoly& operator*=(const Rational& c);
  NcPoly operator-() const { NcPoly r = *this; r *= -1; return r; }

  friend NcPoly operator+(NcPoly f, const NcPoly& g) { return f += g; }
  friend NcPoly operator-(NcPoly f, const NcPoly& g) { return f -= g; }
  friend NcPoly operator*(NcPoly f, const Rational& c) { return f *= c; }
  friend NcPoly operator*(const Rational& c, NcPoly f) { return f *= c; }
  friend NcPoly operator*(const NcPoly& f, const NcPoly& g);
  friend bool operator==(const NcPoly&, const NcPoly&) = default;

 private:
  std::vector<Term> terms_;
};

struct PolyStats {
  Word lm;
  int deg;
  int degmin;
  int degdiff;
};

/// Throws ZeroPolynomial for f = 0.
PolyStats poly_stats(const NcPoly& f, const VariableTable& vars);

/// deg(f) - degmin(f); f must be nonzero.
inline int degdiff(const NcPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  return f.deg() - f.degmin();
}

}  // namespace ncsparse
