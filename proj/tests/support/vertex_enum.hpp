#pragma once

#include "ncsparse/lp.hpp"

#include <optional>
#include <vector>

namespace ncsparse::testing {

using Dense = std::vector<std::vector<Rational>>;

inline Dense densify(const SparseMatrix<Rational>& U) {
  Dense d(static_cast<std::size_t>(U.rows()), std::vector<Rational>(static_cast<std::size_t>(U.cols())));
  for (Eigen::Index j = 0; j < U.cols(); ++j)
    for (SparseMatrix<Rational>::InnerIterator it(U, j); it; ++it)
      d[static_cast<std::size_t>(it.row())][static_cast<std::size_t>(j)] = it.value();
  return d;
}

/// The unique x with sum_k U[:, cols[k]] x_k = w, if the columns are independent
/// and the system is consistent.
inline std::optional<std::vector<Rational>> solve_on(const Dense& U, const std::vector<Rational>& w,
                                                     const std::vector<std::size_t>& cols) {
  std::size_t m = U.size(), k = cols.size();
  Dense a(m, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < k; ++c) a[i][c] = U[i][cols[c]];
    a[i][k] = w[i];
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) return std::nullopt;  // dependent columns
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational q = a[i][c] / a[r][c];
      for (std::size_t cc = c; cc <= k; ++cc) a[i][cc] -= q * a[r][cc];
    }
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (a[i][k] != 0) return std::nullopt;
  std::vector<Rational> x(k);
  for (std::size_t c = 0; c < k; ++c) x[c] = a[c][k] / a[c][c];
  return x;
}

/// min c^T v over the basic feasible solutions of U v = w, v >= 0; nullopt if none.
inline std::optional<Rational> min_over_vertices(const Dense& U, const std::vector<Rational>& w,
                                                 const std::vector<Rational>& c) {
  std::size_t m = U.size(), t = c.size();
  std::optional<Rational> best;
  for (std::size_t mask = 0; mask < (std::size_t{1} << t); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < t; ++j)
      if (mask >> j & 1) cols.push_back(j);
    if (cols.size() > m) continue;
    auto x = solve_on(U, w, cols);
    if (!x) continue;
    bool nonneg = true;
    Rational val = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      nonneg = nonneg && (*x)[k] >= 0;
      val += c[cols[k]] * (*x)[k];
    }
    if (nonneg && (!best || val < *best)) best = val;
  }
  return best;
}

struct EnumeratedLp {
  LpStatus status;
  Rational value;
};

/// Feasibility from the vertices of {U v = w, v >= 0}; unboundedness from a
/// ray d >= 0, U d = 0, sum d = 1 with c^T d < 0.
inline EnumeratedLp enumerate_lp(const StandardLp<Rational>& lp) {
  Dense U = densify(lp.U);
  std::vector<Rational> w(lp.w.data(), lp.w.data() + lp.w.size());
  std::vector<Rational> c(lp.c.data(), lp.c.data() + lp.c.size());
  auto best = min_over_vertices(U, w, c);
  if (!best) return {LpStatus::Infeasible, 0};
  Dense R = U;
  R.emplace_back(c.size(), Rational(1));
  std::vector<Rational> z(w.size(), Rational(0));
  z.emplace_back(1);
  auto ray = min_over_vertices(R, z, c);
  if (ray && *ray < 0) return {LpStatus::Unbounded, 0};
  return {LpStatus::Optimal, *best};
}

}  // namespace ncsparse::testing
