#include "ncsparse/oracle.hpp"
#include "ncsparse/parse.hpp"
#include "ncsparse/sparsify.hpp"

#include "support/instances.hpp"

#include <doctest.h>

#include <set>

using namespace ncsparse;

namespace {

const VariableTable xy({"x", "y"});

GeneratorSystem two_gens() {
  return GeneratorSystem(xy, {parse_poly("x*y - 1", xy), parse_poly("y*x - 1", xy)});
}

GeneratorSystem moore_penrose() {
  VariableTable v({"a", "as", "ad", "ads", "b"});
  std::vector<NcPoly> g;
  for (const char* s : {"a*b - 1", "b*a - 1", "a*ad*a - a", "ad*a*ad - ad", "ads*as - a*ad", "as*ads - ad*a"})
    g.push_back(parse_poly(s, v));
  return GeneratorSystem(v, g);
}

const char* kMooreAlpha = "ad*e_1 - b*e_1 - b*e_3*b + e_2*ad*a*b";

bool all_unit(const ModuleElement& x) {
  for (const auto& t : x.terms())
    if (t.coeff != 1 && t.coeff != -1) return false;
  return true;
}

}  // namespace

TEST_CASE("pure difference binomial check") {
  auto mp = moore_penrose();
  CHECK(tu_structural_check(mp, parse_poly("b - ad", mp.vars())));
  CHECK(!tu_structural_check(GeneratorSystem(xy, {parse_poly("2*x*y - 1", xy)}), parse_poly("x", xy)));
  CHECK(!tu_structural_check(GeneratorSystem(xy, {parse_poly("x*y + y*x - 1", xy)}), parse_poly("x", xy)));
  CHECK(tu_structural_check(GeneratorSystem(xy, {parse_poly("x*y", xy)}), parse_poly("-x", xy)));
  CHECK(!tu_structural_check(GeneratorSystem(xy, {parse_poly("x*y + 1", xy)}), parse_poly("x", xy)));
}

TEST_CASE("relevant syzygies match a naive closure") {
  auto sys = two_gens();
  std::vector<ModuleElement> alphas = {parse_element("y*x*e_1 + e_2", sys), parse_element("e_1*x", sys),
                                       parse_element("x*e_1 - y*e_2*x", sys)};
  for (int n : {5, 6}) {
    auto bound = SignatureBound::degree(n);
    auto r = syzygy_basis_up_to(sys, bound);
    // every placement a*g*b below the bound
    std::vector<ModuleElement> placements;
    for (const auto& g : r.syz.elements)
      for (int k = 0; g.wdeg() + k < n; ++k)
        for (int i = 0; i <= k; ++i)
          for (const auto& a : words_of_length(2, static_cast<std::size_t>(i)))
            for (const auto& b : words_of_length(2, static_cast<std::size_t>(k - i)))
              placements.push_back(g.multiplied(a, b));
    for (const auto& alpha : alphas) {
      std::set<ModuleMonomial> reached;
      for (const auto& t : alpha.terms()) reached.insert(t.monomial);
      std::vector<bool> in(placements.size(), false);
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t p = 0; p < placements.size(); ++p) {
          if (in[p]) continue;
          bool meets = false;
          for (const auto& t : placements[p].terms()) meets = meets || reached.count(t.monomial);
          if (!meets) continue;
          in[p] = grew = true;
          for (const auto& t : placements[p].terms()) reached.insert(t.monomial);
        }
      }
      std::set<std::string> expected, got;
      for (std::size_t p = 0; p < placements.size(); ++p)
        if (in[p]) expected.insert(format_element(placements[p], sys));
      auto V = relevant_syzygies(alpha, r.syz);
      for (const auto& g : V.elements) {
        CHECK(expand(g, sys).is_zero());
        CHECK(g.wdeg() < n);
        got.insert(format_element(g, sys));
      }
      CHECK(got == expected);
      auto support = V.support_with(alpha);
      CHECK(std::set<ModuleMonomial>(support.begin(), support.end()) == reached);
    }
  }

  auto r = syzygy_basis_up_to(sys, SignatureBound::degree(5));
  auto V = relevant_syzygies(parse_element("e_1*x", sys), r.syz);
  bool koszul = false;
  for (const auto& g : V.elements) koszul = koszul || g == parse_element("x*e_2 - e_1*x", sys);
  CHECK(koszul);

  GeneratorSystem one(xy, {parse_poly("x*y - 1", xy)});
  auto r1 = syzygy_basis_up_to(one, SignatureBound::degree(3));
  CHECK(relevant_syzygies(ModuleElement::monomial(one.monomial({}, 0, {})), r1.syz).size() == 0);
}

TEST_CASE("prune keeps the alpha expansion and removes unique singletons") {
  auto sys = two_gens();
  auto r = syzygy_basis_up_to(sys, SignatureBound::degree(6));
  auto alpha = parse_element("y*x*e_1 + e_2", sys);
  auto V = relevant_syzygies(alpha, r.syz);
  auto p = prune(V, alpha);
  CHECK(expand(p.alpha, sys) == expand(alpha, sys));
  CHECK(p.syzygies.size() <= V.size());
  for (const auto& g : p.syzygies.elements) CHECK(expand(g, sys).is_zero());

  // a syzygy sharing nothing with alpha or anything else is dropped
  RelevantSyzygies lone;
  lone.bound = SignatureBound::degree(6);
  lone.elements.push_back(parse_element("x*e_1*x - x*x*e_2", sys));
  auto q = prune(lone, parse_element("e_1", sys));
  CHECK(q.syzygies.size() == 0);
  CHECK(q.stats.singletons_removed == 1);
}

TEST_CASE("prune is deterministic given the seed") {
  auto mp = moore_penrose();
  auto r = syzygy_basis_up_to(mp, SignatureBound::degree(7));
  auto alpha = parse_element(kMooreAlpha, mp);
  auto V = relevant_syzygies(alpha, r.syz);
  CHECK(V.support_with(alpha).size() == 133);
  PruneOptions o;
  o.seed = 5;
  auto a = prune(V, alpha, o), b = prune(V, alpha, o);
  CHECK(a.syzygies.elements == b.syzygies.elements);
  CHECK(a.alpha == b.alpha);
}

TEST_CASE("system without syzygies recovers alpha") {
  auto sys = two_gens();
  auto alpha = parse_element("y*x*e_1 + e_2", sys);
  RelevantSyzygies none;
  none.bound = SignatureBound::degree(6);
  auto cs = build_system(alpha, none, sys, expand(alpha, sys));
  CHECK(cs.basis.size() == 2);
  auto m = minimize(cs);
  CHECK(cs.element(m.y) == alpha);
  CHECK(cs.element(cs.coordinates(alpha)) == alpha);
  CHECK_THROWS_AS(build_system(alpha, none, sys, parse_poly("x*x*x*x*x", xy)), InconsistentInput);
}

TEST_CASE("system solution set contains alpha") {
  auto sys = two_gens();
  auto r = syzygy_basis_up_to(sys, SignatureBound::degree(5));
  auto alpha = parse_element("y*x*e_1 + e_2", sys);
  NcPoly f = expand(alpha, sys);
  auto V = relevant_syzygies(alpha, r.syz);
  auto cs = build_system(alpha, V, sys, f);
  RationalVector y = cs.coordinates(alpha);
  CHECK(cs.matrix * y == cs.rhs);
  for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(cs.basis.size()); ++j) {
    RationalVector e = RationalVector::Zero(static_cast<Eigen::Index>(cs.basis.size()));
    e[j] = 1;
    // column j is the expansion of basis[j] on the row monomials
    NcPoly col = sys.expand(cs.basis[static_cast<std::size_t>(j)]);
    RationalVector expected = RationalVector::Zero(static_cast<Eigen::Index>(cs.row_monomials.size()));
    for (std::size_t i = 0; i < cs.row_monomials.size(); ++i) expected[static_cast<Eigen::Index>(i)] = col.coeff(cs.row_monomials[i]);
    CHECK(cs.matrix * e == expected);
  }
}

TEST_CASE("minimize a one-row system") {
  CofactorSystem cs;
  GeneratorSystem sys(xy, {parse_poly("x", xy), parse_poly("y", xy)});
  cs.basis = {sys.monomial({}, 0, {}), sys.monomial({}, 1, {})};
  cs.matrix.resize(1, 2);
  cs.matrix.insert(0, 0) = Rational(1);
  cs.matrix.insert(0, 1) = Rational(-1);
  cs.rhs = RationalVector::Constant(1, Rational(1));
  cs.row_monomials = {Word{0}};
  auto m = minimize(cs);
  CHECK(m.y[0] == 1);
  CHECK(m.y[1] == 0);
  CHECK(m.value == 1);

  // square invertible: unique solution whatever the weights
  cs.matrix.resize(2, 2);
  cs.matrix.insert(0, 0) = Rational(2);
  cs.matrix.insert(0, 1) = Rational(1);
  cs.matrix.insert(1, 1) = Rational(3);
  cs.rhs = RationalVector(2);
  cs.rhs << Rational(5), Rational(3);
  cs.row_monomials = {Word{1}, Word{0}};
  Weights w;
  w.per_monomial = {Rational(9), Rational(1, 9)};
  auto u = minimize(cs, w);
  CHECK(u.y[0] == 2);
  CHECK(u.y[1] == 1);
}

TEST_CASE("pipeline on small inputs") {
  auto sys = two_gens();
  auto c = sparsify_pipeline(sys.gen(0), sys, SignatureBound::degree(4), std::nullopt);
  CHECK(c.representation == ModuleElement::monomial(sys.monomial({}, 0, {})));
  CHECK(c.l0_weight == 1);
  CHECK(c.l1_weight == 1);

  NcPoly f = parse_poly("y*x*x*y - 1", xy);
  auto d = sparsify_pipeline(f, sys, SignatureBound::degree(6), std::nullopt);
  CHECK(expand(d.representation, sys) == f);
  CHECK(d.l0_weight == 2);
  CHECK(d.l1_weight == 2);
  CHECK(d.l0_optimal_up_to_bound);
  CHECK(algorithm1(f, sys, 2));
  CHECK(!algorithm1(f, sys, 1));

  CHECK_THROWS_AS(sparsify_pipeline(NcPoly::constant(1), sys, SignatureBound::degree(6), std::nullopt),
                  NotInIdealUpToBound);
  CHECK_THROWS_AS(sparsify_pipeline(f, sys, SignatureBound::degree(6), parse_element("e_1", sys)),
                  std::invalid_argument);

  PipelineOptions o;
  o.weights = Weights::degree();
  auto w = sparsify_pipeline(f, sys, SignatureBound::degree(6), std::nullopt, o);
  CHECK(expand(w.representation, sys) == f);
  CHECK(!w.l0_optimal_up_to_bound);
}

TEST_CASE("moore-penrose below degree 7") {
  auto mp = moore_penrose();
  NcPoly f = parse_poly("b - ad", mp.vars());
  auto alpha = parse_element(kMooreAlpha, mp);
  for (bool pr : {true, false}) {
    PipelineOptions o;
    o.prune = pr;
    auto c = sparsify_pipeline(f, mp, SignatureBound::degree(7), alpha, o);
    CHECK(expand(c.representation, mp) == f);
    CHECK(c.l0_weight == 4);
    CHECK(c.l1_weight == 4);
    CHECK(all_unit(c.representation));
    CHECK(c.l0_optimal_up_to_bound);
    CHECK(c.stats.basis_before_prune == 133);
  }
}

TEST_CASE("random binomial instances give unit coefficients") {
  std::mt19937_64 rng(77);
  int done = 0;
  while (done < 15) {
    auto sys = testing::random_binomial_system(rng);
    auto claim = testing::random_chain_claim(rng, sys, 5);
    if (!claim) continue;
    ++done;
    auto c = sparsify_pipeline(claim->f, sys, SignatureBound::degree(6), claim->alpha);
    CHECK(expand(c.representation, sys) == claim->f);
    CHECK(all_unit(c.representation));
    CHECK(c.l1_weight == c.l0_weight);
    CHECK(c.l1_weight <= claim->alpha.l1());
    CHECK(c.l0_optimal_up_to_bound);
  }
}
