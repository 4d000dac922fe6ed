#include "ncsparse/lp.hpp"

#include "support/instances.hpp"
#include "support/vertex_enum.hpp"

#include <doctest.h>

#include <sstream>

using namespace ncsparse;

namespace {

StandardLp<Rational> make_lp(const std::vector<std::vector<long>>& U, std::vector<long> w, std::vector<long> c) {
  StandardLp<Rational> lp;
  std::vector<Eigen::Triplet<Rational>> t;
  for (std::size_t i = 0; i < U.size(); ++i)
    for (std::size_t j = 0; j < U[i].size(); ++j)
      if (U[i][j] != 0) t.emplace_back(i, j, Rational(U[i][j]));
  lp.U.resize(static_cast<Eigen::Index>(U.size()), static_cast<Eigen::Index>(c.size()));
  lp.U.setFromTriplets(t.begin(), t.end());
  lp.w.resize(static_cast<Eigen::Index>(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i) lp.w[static_cast<Eigen::Index>(i)] = w[i];
  lp.c.resize(static_cast<Eigen::Index>(c.size()));
  for (std::size_t j = 0; j < c.size(); ++j) lp.c[static_cast<Eigen::Index>(j)] = c[j];
  return lp;
}

}  // namespace

TEST_CASE("difference of two nonnegatives") {
  auto lp = make_lp({{1, -1}}, {1}, {1, 1});
  auto r = solve_standard(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  const auto& s = *r.solution;
  CHECK(s.v[0] == 1);
  CHECK(s.v[1] == 0);
  CHECK(s.value == 1);
  CHECK(s.dual[0] == 1);
  CHECK(verify_certificate(lp, s));

  auto bad = s;
  bad.value += 1;
  CHECK(!verify_certificate(lp, bad));
  bad = s;
  bad.v[0] = 2;
  bad.v[1] = 1;
  CHECK(!verify_certificate(lp, bad));  // feasible but not optimal
  bad = s;
  bad.v[0] = -1;
  bad.v[1] = -2;
  bad.value = -3;
  CHECK(!verify_certificate(lp, bad));
}

TEST_CASE("objective equal to the constraint") {
  auto lp = make_lp({{1, 1}}, {2}, {1, 1});
  auto r = solve_standard(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.solution->value == 2);
  CHECK((r.solution->v[0] == 0 || r.solution->v[1] == 0));
}

TEST_CASE("infeasible and unbounded") {
  CHECK(solve_standard(make_lp({{0}}, {1}, {1})).status == LpStatus::Infeasible);
  CHECK(solve_standard(make_lp({{1, 1}}, {-1}, {1, 1})).status == LpStatus::Infeasible);
  CHECK(solve_standard(make_lp({{1, -1}}, {1}, {0, -1})).status == LpStatus::Unbounded);
}

TEST_CASE("redundant rows") {
  auto lp = make_lp({{1, 1, 0}, {2, 2, 0}, {0, 1, 1}}, {2, 4, 1}, {1, 2, 3});
  auto r = solve_standard(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.solution->value == 3);
  CHECK(verify_certificate(lp, *r.solution));
}

TEST_CASE("scaling the right-hand side scales the optimum") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 60; ++k) {
    auto lp = testing::random_lp(rng);
    auto r = solve_standard(lp);
    if (r.status != LpStatus::Optimal) continue;
    auto scaled = lp;
    Rational s(7, 3);
    scaled.w *= s;
    auto r2 = solve_standard(scaled);
    REQUIRE(r2.status == LpStatus::Optimal);
    CHECK(r2.solution->value == s * r.solution->value);
  }
}

TEST_CASE("agreement with vertex enumeration") {
  std::mt19937_64 rng(1);
  int optimal = 0;
  for (int k = 0; k < 150; ++k) {
    auto lp = testing::random_lp(rng);
    auto r = solve_standard(lp);
    auto e = testing::enumerate_lp(lp);
    REQUIRE(r.status == e.status);
    if (r.status == LpStatus::Optimal) {
      ++optimal;
      CHECK(r.solution->value == e.value);
      CHECK(verify_certificate(lp, *r.solution));
    }
  }
  CHECK(optimal > 20);
}

TEST_CASE("text dump") {
  auto lp = make_lp({{1, -1}}, {1}, {1, 1});
  std::ostringstream os;
  dump_lp(os, lp);
  CHECK(os.str() == "min 1 1\nrow 1 -1 = 1\n");
}
