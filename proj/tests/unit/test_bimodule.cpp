#include "ncsparse/bimodule.hpp"
#include "ncsparse/parse.hpp"

#include <doctest.h>

#include <random>

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

// Number of a e_i b with |a| + |b| = k over n letters.
std::size_t placements(std::size_t n, int k) {
  std::size_t words = 1;
  for (int i = 0; i < k; ++i) words *= n;
  return static_cast<std::size_t>(k + 1) * words;
}

}  // namespace

TEST_CASE("dopot comparisons") {
  auto sys = two_gens();
  auto e1 = sys.monomial({}, 0, {}), e2 = sys.monomial({}, 1, {});
  CHECK(cmp_dopot(sys.monomial(Word{1, 0}, 0, {}), e2, sys) > 0);
  CHECK(cmp_dopot(e1, e2, sys) < 0);
  CHECK(cmp_dopot(sys.monomial(Word{0}, 0, {}), sys.monomial({}, 0, Word{0}), sys) > 0);
  CHECK(cmp_dopot(e1, e1, sys) == 0);
}

TEST_CASE("dopot is a compatible total order") {
  auto sys = two_gens();
  auto all = monomials_below(SignatureBound::degree(6), sys);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const auto& m = all[rng() % all.size()];
    const auto& n = all[rng() % all.size()];
    Word a{static_cast<int>(rng() % 2)}, b{static_cast<int>(rng() % 2), 1};
    CHECK((m.multiplied(a, b) <=> n.multiplied(a, b)) == (m <=> n));
  }
}

TEST_CASE("expand") {
  auto sys = two_gens();
  auto yx = parse_element("y*x*e_1 + e_2", sys);
  CHECK(expand(yx, sys) == parse_poly("y*x*x*y - 1", xy));
  auto syz = parse_element("e_1*x - x*e_2", sys);
  CHECK(expand(syz, sys).is_zero());

  auto mp = moore_penrose();
  auto alpha = parse_element("ad*e_1 - b*e_1 - b*e_3*b + e_2*ad*a*b", mp);
  CHECK(expand(alpha, mp) == parse_poly("b - ad", mp.vars()));
}

TEST_CASE("expand is linear over disjoint supports") {
  auto sys = two_gens();
  auto all = monomials_below(SignatureBound::degree(5), sys);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    ModuleElement x, y;
    for (int t = 0; t < 3; ++t) {
      x += ModuleElement::monomial(all[rng() % all.size()], static_cast<long>(rng() % 5) - 2);
      y += ModuleElement::monomial(all[rng() % all.size()], static_cast<long>(rng() % 5) - 2);
    }
    CHECK(expand(x + y, sys) == expand(x, sys) + expand(y, sys));
    CHECK(expand(x.multiplied(Word{0}, Word{1}), sys) == expand(x, sys).multiplied(Word{0}, Word{1}));
    bool disjoint = true;
    for (const auto& t : x.terms()) disjoint = disjoint && !y.contains(t.monomial);
    if (disjoint) CHECK((x + y).l1() == x.l1() + y.l1());
  }
}

TEST_CASE("signature") {
  auto sys = two_gens();
  CHECK(signature(parse_element("y*x*e_1 + e_2", sys), sys) == sys.monomial(Word{1, 0}, 0, {}));
  CHECK(signature(parse_element("-7*x*e_2", sys), sys) == sys.monomial(Word{0}, 1, {}));
  CHECK(signature(parse_element("e_1 + e_2", sys), sys) == sys.monomial({}, 1, {}));
  CHECK_THROWS_AS(signature(ModuleElement{}, sys), ZeroElement);
}

TEST_CASE("monomials below a bound") {
  auto sys = two_gens();
  auto m = monomials_below(SignatureBound::degree(3), sys);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == sys.monomial({}, 0, {}));
  CHECK(m[1] == sys.monomial({}, 1, {}));
  CHECK(monomials_below(SignatureBound::degree(2), sys).empty());
  CHECK(monomials_below(SignatureBound::degree(0), sys).empty());

  // closed form: sum over generators and |a| + |b| = k of (k + 1) * n^k
  for (int n = 2; n <= 6; ++n) {
    std::size_t expected = 0;
    for (int k = 0; k + 2 < n; ++k) expected += 2 * placements(2, k);
    CHECK(monomials_below(SignatureBound::degree(n), sys).size() == expected);
    CHECK(count_monomials_below(SignatureBound::degree(n), sys) == expected);
  }

  auto mp = moore_penrose();
  std::size_t expected = 0;
  for (std::size_t i = 0; i < mp.size(); ++i)
    for (int k = 0; k + mp.degree(i) <= 7; ++k) expected += placements(5, k);
  CHECK(count_monomials_below(SignatureBound::degree(8), mp) == expected);

  auto sigma = sys.monomial(Word{0}, 0, {});
  auto below = monomials_below(SignatureBound::explicit_monomial(sigma), sys);
  for (const auto& mu : below) CHECK(mu < sigma);
  CHECK(below.size() == 4);  // e_1, e_2, e_1*x, e_1*y
  CHECK_THROWS_AS(monomials_below(SignatureBound::degree(12), sys, 100), BoundTooLarge);
}

TEST_CASE("module element text round trip") {
  auto mp = moore_penrose();
  auto alpha = parse_element("ad*e_1 - b*e_1 - b*e_3*b + e_2*ad*a*b", mp);
  CHECK(alpha.l0() == 4);
  CHECK(alpha.l1() == 4);
  CHECK(parse_element(format_element(alpha, mp), mp) == alpha);
  CHECK(parse_monomial("b*e_3*b", mp) == mp.monomial(Word{4}, 2, Word{4}));
  CHECK_THROWS(parse_element("e_7", mp));
  CHECK_THROWS(parse_element("q*e_1", mp));
}
