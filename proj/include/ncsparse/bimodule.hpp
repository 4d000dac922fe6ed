#pragma once

#include "ncsparse/poly.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncsparse {

class BoundTooLarge : public std::runtime_error {
 public:
  explicit BoundTooLarge(const std::string& what) : std::runtime_error(what) {}
};

class ZeroElement : public std::domain_error {
 public:
  ZeroElement() : std::domain_error("signature of the zero module element") {}
};

/// A module monomial a e_i b of the free bimodule.
///
/// `generator` is 0-based; the text form e_i is 1-based. The weighted degree
/// |a| + |b| + deg(f_i) is cached at construction so monomials order
/// themselves under DoPoT without access to the generator system.
struct ModuleMonomial {
  Word left;
  std::uint32_t generator = 0;
  Word right;
  int wdeg = 0;

  /// a * this * b
  ModuleMonomial multiplied(const Word& a, const Word& b) const {
    return {a * left, generator, right * b, wdeg + static_cast<int>(a.size() + b.size())};
  }
  /// True iff this = a * divisor * b for some words a, b.
  bool divisible_by(const ModuleMonomial& divisor) const {
    return generator == divisor.generator && left.ends_with(divisor.left) &&
           right.starts_with(divisor.right);
  }

  friend bool operator==(const ModuleMonomial& x, const ModuleMonomial& y) {
    return x.generator == y.generator && x.left == y.left && x.right == y.right;
  }
  /// Degree over position over term; words compared by deglex, left word first.
  friend std::strong_ordering operator<=>(const ModuleMonomial& x, const ModuleMonomial& y) {
    if (x.wdeg != y.wdeg) return x.wdeg <=> y.wdeg;
    if (x.generator != y.generator) return x.generator <=> y.generator;
    if (auto c = cmp_deglex(x.left, y.left); c != 0) return c;
    return cmp_deglex(x.right, y.right);
  }
};

struct ModuleMonomialHash {
  std::size_t operator()(const ModuleMonomial& m) const noexcept {
    std::size_t h = WordHash{}(m.left);
    h ^= WordHash{}(m.right) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h ^ (m.generator * 0x100000001b3ULL);
  }
};

struct ModuleTerm {
  ModuleMonomial monomial;
  Rational coeff;
  friend bool operator==(const ModuleTerm&, const ModuleTerm&) = default;
};

/// A Q-linear combination of module monomials; a cofactor representation.
/// Terms are sorted by strictly decreasing DoPoT order, so the signature is
/// the first term.
class ModuleElement {
 public:
  ModuleElement() = default;
  static ModuleElement monomial(ModuleMonomial m, const Rational& c = 1);
  static ModuleElement from_terms(std::vector<ModuleTerm> terms);

  const std::vector<ModuleTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// l0 weight: number of terms.
  std::size_t l0() const { return terms_.size(); }
  /// l1 weight: sum of absolute coefficients.
  Rational l1() const;
  /// Max weighted degree over the support; -1 for zero.
  int wdeg() const { return terms_.empty() ? -1 : terms_.front().monomial.wdeg; }

  /// Throws ZeroElement.
  const ModuleMonomial& signature() const;
  /// Coefficient of the signature.
  const Rational& leading_coeff() const;
  Rational coeff(const ModuleMonomial& m) const;
  bool contains(const ModuleMonomial& m) const;

  ModuleElement multiplied(const Word& left, const Word& right) const;
  /// this += c * a * other * b
  void add_scaled(const ModuleElement& other, const Rational& c, const Word& left,
                  const Word& right);

  ModuleElement& operator+=(const ModuleElement& o) { add_scaled(o, 1, {}, {}); return *this; }
  ModuleElement& operator-=(const ModuleElement& o) { add_scaled(o, -1, {}, {}); return *this; }
  ModuleElement& operator*=(const Rational& c);
  friend ModuleElement operator+(ModuleElement x, const ModuleElement& y) { return x += y; }
  friend ModuleElement operator-(ModuleElement x, const ModuleElement& y) { return x -= y; }
  friend ModuleElement operator*(const Rational& c, ModuleElement x) { return x *= c; }
  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  std::vector<ModuleTerm> terms_;
};

/// Generators f_1..f_r over a variable table.
class GeneratorSystem {
 public:
  GeneratorSystem() = default;
  /// Throws std::invalid_argument when empty or a generator is zero.
  GeneratorSystem(VariableTable vars, std::vector<NcPoly> gens);

  const VariableTable& vars() const { return vars_; }
  std::size_t size() const { return gens_.size(); }
  const NcPoly& gen(std::size_t i) const { return gens_.at(i); }
  const std::vector<NcPoly>& gens() const { return gens_; }
  int degree(std::size_t i) const { return degrees_.at(i); }
  int min_degree() const;
  int max_degdiff() const;

  /// a e_i b with 0-based i.
  ModuleMonomial monomial(Word left, std::uint32_t generator, Word right) const;
  bool valid(const ModuleMonomial& m) const;

  /// a * f_i * b
  NcPoly expand(const ModuleMonomial& m) const { return gens_[m.generator].multiplied(m.left, m.right); }

 private:
  VariableTable vars_;
  std::vector<NcPoly> gens_;
  std::vector<int> degrees_;
};

std::strong_ordering cmp_dopot(const ModuleMonomial& mu, const ModuleMonomial& nu,
                               const GeneratorSystem& sys);

/// sum c_i a_i f_{j_i} b_i
NcPoly expand(const ModuleElement& alpha, const GeneratorSystem& sys);

/// Throws ZeroElement.
ModuleMonomial signature(const ModuleElement& alpha, const GeneratorSystem& sys);

/// Upper bound sigma on signatures: either an explicit module monomial or
/// DegreeBound(n), the smallest module monomial of weighted degree n (so the
/// monomials below it are exactly those of weighted degree < n).
class SignatureBound {
 public:
  static SignatureBound degree(int n) { return SignatureBound(n, std::nullopt); }
  static SignatureBound explicit_monomial(ModuleMonomial sigma) {
    int d = sigma.wdeg;
    return SignatureBound(d, std::move(sigma));
  }

  bool is_degree() const { return !sigma_.has_value(); }
  /// n for DegreeBound(n); wdeg(sigma) for an explicit bound.
  int degree_value() const { return degree_; }
  const std::optional<ModuleMonomial>& sigma() const { return sigma_; }
  /// Largest weighted degree a monomial strictly below the bound can have.
  int max_wdeg() const { return sigma_ ? degree_ : degree_ - 1; }

  /// mu strictly below the bound.
  bool admits(const ModuleMonomial& mu) const {
    return sigma_ ? mu < *sigma_ : mu.wdeg < degree_;
  }

 private:
  SignatureBound(int d, std::optional<ModuleMonomial> s) : degree_(d), sigma_(std::move(s)) {}
  int degree_;
  std::optional<ModuleMonomial> sigma_;
};

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

/// Number of module monomials strictly below the bound, without enumerating.
std::size_t count_monomials_below(const SignatureBound& bound, const GeneratorSystem& sys);

/// All mu strictly below the bound, ascending. Throws BoundTooLarge above `cap`.
std::vector<ModuleMonomial> monomials_below(const SignatureBound& bound,
                                            const GeneratorSystem& sys,
                                            std::size_t cap = kDefaultEnumerationCap);

/// Text form "a*e_i*b" (1-based i, unit words omitted).
std::string format_monomial(const ModuleMonomial& m, const GeneratorSystem& sys);
/// e.g. "ad*e_1 - b*e_1 + 1/2*b*e_3*b"
std::string format_element(const ModuleElement& alpha, const GeneratorSystem& sys);
/// Inverse of format_monomial. Throws std::invalid_argument.
ModuleMonomial parse_monomial(std::string_view text, const GeneratorSystem& sys);
/// Inverse of format_element. Throws std::invalid_argument.
ModuleElement parse_element(std::string_view text, const GeneratorSystem& sys);

}  // namespace ncsparse
