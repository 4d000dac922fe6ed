#include "ncsparse/poly.hpp"

#include <algorithm>

namespace ncsparse {

NcPoly NcPoly::constant(const Rational& c) { return monomial(Word{}, c); }

NcPoly NcPoly::monomial(Word w, const Rational& c) {
  NcPoly f;
  if (c != 0) f.terms_.push_back({std::move(w), c});
  return f;
}

NcPoly NcPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return cmp_deglex(a.word, b.word) > 0; });
  NcPoly f;
  for (auto& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().word == t.word)
      f.terms_.back().coeff += t.coeff;
    else {
      if (!f.terms_.empty() && f.terms_.back().coeff == 0) f.terms_.pop_back();
      f.terms_.push_back(std::move(t));
    }
  }
  if (!f.terms_.empty() && f.terms_.back().coeff == 0) f.terms_.pop_back();
  return f;
}

const Word& NcPoly::lm() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.front().word;
}

const Rational& NcPoly::lc() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.front().coeff;
}

int NcPoly::degmin() const {
  if (terms_.empty()) return -1;
  // Lengths are non-increasing along the term list.
  return static_cast<int>(terms_.back().word.size());
}

Rational NcPoly::coeff(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w, [](const Term& t, const Word& x) {
    return cmp_deglex(t.word, x) > 0;
  });
  return (it != terms_.end() && it->word == w) ? it->coeff : Rational(0);
}

NcPoly NcPoly::multiplied(const Word& left, const Word& right) const {
  NcPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({left * t.word * right, t.coeff});
  return r;
}

void NcPoly::add_scaled(const NcPoly& g, const Rational& c, const Word& left, const Word& right) {
  if (c == 0 || g.is_zero()) return;
  const bool plain = left.empty() && right.empty();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto it = terms_.begin();
  for (const auto& gt : g.terms_) {
    Word w = plain ? gt.word : left * gt.word * right;
    while (it != terms_.end() && cmp_deglex(it->word, w) > 0) out.push_back(std::move(*it++));
    if (it != terms_.end() && it->word == w) {
      Rational s = it->coeff + c * gt.coeff;
      if (s != 0) out.push_back({std::move(w), std::move(s)});
      ++it;
    } else {
      out.push_back({std::move(w), c * gt.coeff});
    }
  }
  while (it != terms_.end()) out.push_back(std::move(*it++));
  terms_ = std::move(out);
}

NcPoly& NcPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

NcPoly operator*(const NcPoly& f, const NcPoly& g) {
  std::vector<Term> terms;
  terms.reserve(f.size() * g.size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) terms.push_back({a.word * b.word, a.coeff * b.coeff});
  return NcPoly::from_terms(std::move(terms));
}

PolyStats poly_stats(const NcPoly& f, const VariableTable& vars) {
  if (f.is_zero()) throw ZeroPolynomial();
  for (const auto& t : f.terms())
    if (!vars.valid(t.word)) throw std::invalid_argument("polynomial not over the variable table");
  return {f.lm(), f.deg(), f.degmin(), f.deg() - f.degmin()};
}

}  // namespace ncsparse
