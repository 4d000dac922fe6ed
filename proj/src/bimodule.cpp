#include "ncsparse/bimodule.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace ncsparse {

namespace {

bool dopot_greater(const ModuleTerm& a, const ModuleTerm& b) { return a.monomial > b.monomial; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Saturating sum of (k+1) * K^k for k = 0..kmax.
std::size_t count_pairs_up_to(std::size_t nvars, int kmax) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  long double power = 1;
  for (int k = 0; k <= kmax; ++k) {
    long double add = static_cast<long double>(k + 1) * power;
    if (add + static_cast<long double>(total) >= static_cast<long double>(kMax)) return kMax;
    total += static_cast<std::size_t>(add);
    power *= static_cast<long double>(nvars);
  }
  return total;
}

}  // namespace

ModuleElement ModuleElement::monomial(ModuleMonomial m, const Rational& c) {
  ModuleElement e;
  if (c != 0) e.terms_.push_back({std::move(m), c});
  return e;
}

ModuleElement ModuleElement::from_terms(std::vector<ModuleTerm> terms) {
  std::sort(terms.begin(), terms.end(), dopot_greater);
  ModuleElement e;
  for (auto& t : terms) {
    if (!e.terms_.empty() && e.terms_.back().monomial == t.monomial) {
      e.terms_.back().coeff += t.coeff;
    } else {
      if (!e.terms_.empty() && e.terms_.back().coeff == 0) e.terms_.pop_back();
      e.terms_.push_back(std::move(t));
    }
  }
  if (!e.terms_.empty() && e.terms_.back().coeff == 0) e.terms_.pop_back();
  return e;
}

Rational ModuleElement::l1() const {
  Rational s = 0;
  for (const auto& t : terms_) s += abs(t.coeff);
  return s;
}

const ModuleMonomial& ModuleElement::signature() const {
  if (terms_.empty()) throw ZeroElement();
  return terms_.front().monomial;
}

const Rational& ModuleElement::leading_coeff() const {
  if (terms_.empty()) throw ZeroElement();
  return terms_.front().coeff;
}

Rational ModuleElement::coeff(const ModuleMonomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const ModuleTerm& t, const ModuleMonomial& x) { return t.monomial > x; });
  return (it != terms_.end() && it->monomial == m) ? it->coeff : Rational(0);
}

bool ModuleElement::contains(const ModuleMonomial& m) const { return coeff(m) != 0; }

ModuleElement ModuleElement::multiplied(const Word& left, const Word& right) const {
  ModuleElement r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial.multiplied(left, right), t.coeff});
  return r;
}

void ModuleElement::add_scaled(const ModuleElement& other, const Rational& c, const Word& left,
                               const Word& right) {
  if (c == 0 || other.is_zero()) return;
  const bool plain = left.empty() && right.empty();
  std::vector<ModuleTerm> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto it = terms_.begin();
  for (const auto& ot : other.terms_) {
    ModuleMonomial m = plain ? ot.monomial : ot.monomial.multiplied(left, right);
    while (it != terms_.end() && it->monomial > m) out.push_back(std::move(*it++));
    if (it != terms_.end() && it->monomial == m) {
      Rational s = it->coeff + c * ot.coeff;
      if (s != 0) out.push_back({std::move(m), std::move(s)});
      ++it;
    } else {
      out.push_back({std::move(m), c * ot.coeff});
    }
  }
  while (it != terms_.end()) out.push_back(std::move(*it++));
  terms_ = std::move(out);
}

ModuleElement& ModuleElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

GeneratorSystem::GeneratorSystem(VariableTable vars, std::vector<NcPoly> gens)
    : vars_(std::move(vars)), gens_(std::move(gens)) {
  if (gens_.empty()) throw std::invalid_argument("generator system needs at least one generator");
  for (const auto& g : gens_) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    for (const auto& t : g.terms())
      if (!vars_.valid(t.word)) throw std::invalid_argument("generator not over the variable table");
    degrees_.push_back(g.deg());
  }
}

int GeneratorSystem::min_degree() const { return *std::min_element(degrees_.begin(), degrees_.end()); }

int GeneratorSystem::max_degdiff() const {
  int m = 0;
  for (const auto& g : gens_) m = std::max(m, degdiff(g));
  return m;
}

ModuleMonomial GeneratorSystem::monomial(Word left, std::uint32_t generator, Word right) const {
  if (generator >= gens_.size()) throw std::out_of_range("generator index out of range");
  int w = static_cast<int>(left.size() + right.size()) + degrees_[generator];
  return {std::move(left), generator, std::move(right), w};
}

bool GeneratorSystem::valid(const ModuleMonomial& m) const {
  return m.generator < gens_.size() && vars_.valid(m.left) && vars_.valid(m.right) &&
         m.wdeg == static_cast<int>(m.left.size() + m.right.size()) + degrees_[m.generator];
}

std::strong_ordering cmp_dopot(const ModuleMonomial& mu, const ModuleMonomial& nu,
                               const GeneratorSystem& sys) {
  if (!sys.valid(mu) || !sys.valid(nu)) throw std::invalid_argument("module monomial not over the system");
  return mu <=> nu;
}

NcPoly expand(const ModuleElement& alpha, const GeneratorSystem& sys) {
  NcPoly f;
  for (const auto& t : alpha.terms())
    f.add_scaled(sys.gen(t.monomial.generator), t.coeff, t.monomial.left, t.monomial.right);
  return f;
}

ModuleMonomial signature(const ModuleElement& alpha, const GeneratorSystem& sys) {
  const auto& s = alpha.signature();
  if (!sys.valid(s)) throw std::invalid_argument("module element not over the system");
  return s;
}

std::size_t count_monomials_below(const SignatureBound& bound, const GeneratorSystem& sys) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  const std::size_t nvars = sys.vars().size();
  // Full levels: weighted degree < top; an explicit bound adds a partial top level.
  int top = bound.is_degree() ? bound.degree_value() : bound.max_wdeg();
  std::size_t total = 0;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    std::size_t c = count_pairs_up_to(nvars, top - 1 - sys.degree(i));
    if (c == kMax || total > kMax - c) return kMax;
    total += c;
  }
  if (!bound.is_degree()) {
    const ModuleMonomial& sigma = *bound.sigma();
    for (std::size_t i = 0; i < sys.size(); ++i) {
      int k = top - sys.degree(i);
      if (k < 0) continue;
      for (int la = 0; la <= k; ++la)
        for (const auto& a : words_of_length(nvars, la))
          for (const auto& b : words_of_length(nvars, k - la))
            if (sys.monomial(a, static_cast<std::uint32_t>(i), b) < sigma) ++total;
    }
  }
  return total;
}

std::vector<ModuleMonomial> monomials_below(const SignatureBound& bound, const GeneratorSystem& sys,
                                            std::size_t cap) {
  std::size_t n = count_monomials_below(bound, sys);
  if (n > cap)
    throw BoundTooLarge("enumeration of " + std::to_string(n) + " module monomials exceeds cap " +
                        std::to_string(cap));
  std::vector<ModuleMonomial> out;
  out.reserve(n);
  const std::size_t nvars = sys.vars().size();
  for (int d = sys.min_degree(); d <= bound.max_wdeg(); ++d) {
    for (std::size_t i = 0; i < sys.size(); ++i) {
      int k = d - sys.degree(i);
      if (k < 0) continue;
      for (int la = 0; la <= k; ++la) {
        auto lefts = words_of_length(nvars, la);
        auto rights = words_of_length(nvars, k - la);
        for (const auto& a : lefts)
          for (const auto& b : rights) {
            auto m = sys.monomial(a, static_cast<std::uint32_t>(i), b);
            if (bound.admits(m)) out.push_back(std::move(m));
          }
      }
    }
  }
  return out;
}

std::string format_monomial(const ModuleMonomial& m, const GeneratorSystem& sys) {
  std::string out;
  if (!m.left.empty()) out += sys.vars().format(m.left) + "*";
  out += "e_" + std::to_string(m.generator + 1);
  if (!m.right.empty()) out += "*" + sys.vars().format(m.right);
  return out;
}

std::string format_element(const ModuleElement& alpha, const GeneratorSystem& sys) {
  if (alpha.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : alpha.terms()) {
    bool neg = t.coeff < 0;
    Rational mag = abs(t.coeff);
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (mag != 1) out += to_string(mag) + "*";
    out += format_monomial(t.monomial, sys);
  }
  return out;
}

ModuleMonomial parse_monomial(std::string_view text, const GeneratorSystem& sys) {
  text = trim(text);
  std::vector<std::string_view> parts;
  while (true) {
    auto star = text.find('*');
    parts.push_back(trim(text.substr(0, star)));
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
  }
  std::size_t basis_pos = parts.size();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto p = parts[i];
    if (p.size() > 2 && p[0] == 'e' && p[1] == '_' && !sys.vars().contains(p)) {
      if (basis_pos != parts.size()) throw std::invalid_argument("two basis symbols in module monomial");
      basis_pos = i;
    }
  }
  if (basis_pos == parts.size()) throw std::invalid_argument("module monomial without basis symbol e_i");
  unsigned long idx = 0;
  try {
    std::size_t used = 0;
    idx = std::stoul(std::string(parts[basis_pos].substr(2)), &used);
    if (used != parts[basis_pos].size() - 2) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed basis symbol '" + std::string(parts[basis_pos]) + "'");
  }
  if (idx < 1 || idx > sys.size()) throw std::invalid_argument("basis index out of range");
  std::u16string left, right;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == basis_pos || parts[i] == "1") continue;
    (i < basis_pos ? left : right).push_back(sys.vars().index(parts[i]));
  }
  return sys.monomial(Word(left), static_cast<std::uint32_t>(idx - 1), Word(right));
}

ModuleElement parse_element(std::string_view text, const GeneratorSystem& sys) {
  text = trim(text);
  if (text == "0") return {};
  std::vector<ModuleTerm> terms;
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  while (pos <= text.size()) {
    std::size_t next = text.find_first_of("+-", pos);
    std::string_view chunk = trim(text.substr(pos, next == std::string_view::npos ? next : next - pos));
    if (chunk.empty()) throw std::invalid_argument("empty term in module element");
    Rational c = 1;
    auto star = chunk.find('*');
    std::string_view head = trim(chunk.substr(0, star));
    if (!head.empty() && std::isdigit(static_cast<unsigned char>(head[0]))) {
      c = parse_rational(head);
      if (star == std::string_view::npos) throw std::invalid_argument("coefficient without module monomial");
      chunk.remove_prefix(star + 1);
    }
    if (negative) c = -c;
    terms.push_back({parse_monomial(chunk, sys), c});
    if (next == std::string_view::npos) break;
    negative = text[next] == '-';
    pos = next + 1;
  }
  return ModuleElement::from_terms(std::move(terms));
}

}  // namespace ncsparse
