#pragma once

#include "ncsparse/rational.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncsparse {

/// min c^T v  subject to  U v = w, v >= 0
template <typename Scalar = Rational>
struct StandardLp {
  SparseMatrix<Scalar> U;
  Vector<Scalar> w;
  Vector<Scalar> c;

  Eigen::Index rows() const { return U.rows(); }
  Eigen::Index cols() const { return U.cols(); }
};

template <typename Scalar = Rational>
struct LpSolution {
  Vector<Scalar> v;
  Vector<Scalar> dual;
  Scalar value;
  /// Basic column per row; -1 marks a redundant row.
  std::vector<Eigen::Index> basis;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <typename Scalar = Rational>
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::optional<LpSolution<Scalar>> solution;
  std::size_t pivots = 0;
};

class LpInfeasible : public std::runtime_error {
 public:
  explicit LpInfeasible(const std::string& what) : std::runtime_error(what) {}
};

class LpUnbounded : public std::runtime_error {
 public:
  explicit LpUnbounded(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Two-phase tableau simplex over an exact field with sparse rows. Column
// t + i is the artificial of row i. Bland's rule throughout.
template <typename Scalar>
class Tableau {
 public:
  using Entry = std::pair<Eigen::Index, Scalar>;
  using Row = std::vector<Entry>;

  explicit Tableau(const StandardLp<Scalar>& lp)
      : m_(lp.rows()), t_(lp.cols()), rows_(m_), rhs_(m_), sign_(m_, 1), basis_(m_),
        cost_(t_ + m_) {
    for (Eigen::Index j = 0; j < t_; ++j)
      for (typename SparseMatrix<Scalar>::InnerIterator it(lp.U, j); it; ++it)
        if (it.value() != 0) rows_[it.row()].emplace_back(j, it.value());
    for (Eigen::Index i = 0; i < m_; ++i) {
      auto& r = rows_[i];
      std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
      rhs_[i] = lp.w[i];
      if (rhs_[i] < 0) {
        sign_[i] = -1;
        rhs_[i] = -rhs_[i];
        for (auto& e : r) e.second = -e.second;
      }
      r.emplace_back(t_ + i, Scalar(1));
      basis_[i] = t_ + i;
    }
  }

  LpResult<Scalar> solve(const StandardLp<Scalar>& lp) {
    LpResult<Scalar> result;
    // Phase 1: minimize the sum of artificials.
    std::fill(cost_.begin(), cost_.end(), Scalar(0));
    z_ = 0;
    for (Eigen::Index i = 0; i < m_; ++i) {
      for (const auto& [j, a] : rows_[i])
        if (j < t_) cost_[j] -= a;
      z_ -= rhs_[i];
    }
    run(t_ + m_, result.pivots);
    if (z_ != 0) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[i] < t_) continue;
      for (const auto& [j, a] : rows_[i]) {
        if (j < t_ && a != 0) {
          pivot(i, j);
          ++result.pivots;
          break;
        }
      }
    }
    // Phase 2 reduced costs.
    for (Eigen::Index j = 0; j < t_; ++j) cost_[j] = lp.c[j];
    for (Eigen::Index j = t_; j < t_ + m_; ++j) cost_[j] = 0;
    z_ = 0;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[i] >= t_) continue;
      Scalar cb = lp.c[basis_[i]];
      if (cb == 0) continue;
      for (const auto& [j, a] : rows_[i]) cost_[j] -= cb * a;
      z_ -= cb * rhs_[i];
    }
    if (!run(t_, result.pivots)) {
      result.status = LpStatus::Unbounded;
      return result;
    }
    LpSolution<Scalar> sol;
    sol.v = Vector<Scalar>::Zero(t_);
    sol.basis.assign(m_, -1);
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[i] < t_) {
        sol.v[basis_[i]] = rhs_[i];
        sol.basis[i] = basis_[i];
      }
    }
    sol.dual = Vector<Scalar>::Zero(m_);
    for (Eigen::Index i = 0; i < m_; ++i) sol.dual[i] = -Scalar(sign_[i]) * cost_[t_ + i];
    sol.value = -z_;
    result.status = LpStatus::Optimal;
    result.solution = std::move(sol);
    return result;
  }

 private:
  const Scalar* entry(Eigen::Index i, Eigen::Index j) const {
    const auto& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Entry& e, Eigen::Index col) { return e.first < col; });
    return (it != r.end() && it->first == j) ? &it->second : nullptr;
  }

  // Pivots until optimal; columns >= `enter_limit` never enter. False on an unbounded ray.
  bool run(Eigen::Index enter_limit, std::size_t& pivots) {
    while (true) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < enter_limit; ++j)
        if (cost_[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Scalar best_ratio;
      for (Eigen::Index i = 0; i < m_; ++i) {
        const Scalar* a = entry(i, enter);
        if (!a || *a <= 0) continue;
        Scalar ratio = rhs_[i] / *a;
        if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
      ++pivots;
    }
  }

  static void axpy(Row& dst, const Scalar& f, const Row& src) {
    Row out;
    out.reserve(dst.size() + src.size());
    auto a = dst.begin();
    auto b = src.begin();
    while (a != dst.end() || b != src.end()) {
      if (b == src.end() || (a != dst.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == dst.end() || b->first < a->first) {
        out.emplace_back(b->first, -f * b->second);
        ++b;
      } else {
        Scalar s = a->second - f * b->second;
        if (s != 0) out.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    dst = std::move(out);
  }

  void pivot(Eigen::Index r, Eigen::Index col) {
    Scalar p = *entry(r, col);
    for (auto& e : rows_[r]) e.second /= p;
    rhs_[r] /= p;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (i == r) continue;
      const Scalar* a = entry(i, col);
      if (!a) continue;
      Scalar f = *a;
      axpy(rows_[i], f, rows_[r]);
      rhs_[i] -= f * rhs_[r];
    }
    if (cost_[col] != 0) {
      Scalar f = cost_[col];
      for (const auto& [j, a] : rows_[r]) cost_[j] -= f * a;
      z_ -= f * rhs_[r];
    }
    basis_[r] = col;
  }

  Eigen::Index m_, t_;
  std::vector<Row> rows_;
  std::vector<Scalar> rhs_;
  std::vector<int> sign_;
  std::vector<Eigen::Index> basis_;
  std::vector<Scalar> cost_;
  // Negated objective value of the current basis.
  Scalar z_;
};

}  // namespace detail

/// Exact two-phase simplex. On success the solution is a vertex with a dual
/// certificate satisfying verify_certificate.
template <typename Scalar>
LpResult<Scalar> solve_standard(const StandardLp<Scalar>& lp) {
  if (lp.w.size() != lp.rows() || lp.c.size() != lp.cols())
    throw std::invalid_argument("LP dimensions inconsistent");
  detail::Tableau<Scalar> tableau(lp);
  return tableau.solve(lp);
}

/// Primal feasibility, dual feasibility and zero duality gap, exactly.
template <typename Scalar>
bool verify_certificate(const StandardLp<Scalar>& lp, const LpSolution<Scalar>& sol) {
  if (sol.v.size() != lp.cols() || sol.dual.size() != lp.rows()) return false;
  for (Eigen::Index j = 0; j < sol.v.size(); ++j)
    if (sol.v[j] < 0) return false;
  Vector<Scalar> Uv = Vector<Scalar>::Zero(lp.rows());
  Vector<Scalar> Utl = Vector<Scalar>::Zero(lp.cols());
  for (Eigen::Index j = 0; j < lp.U.outerSize(); ++j)
    for (typename SparseMatrix<Scalar>::InnerIterator it(lp.U, j); it; ++it) {
      Uv[it.row()] += it.value() * sol.v[j];
      Utl[j] += it.value() * sol.dual[it.row()];
    }
  for (Eigen::Index i = 0; i < lp.rows(); ++i)
    if (Uv[i] != lp.w[i]) return false;
  for (Eigen::Index j = 0; j < lp.cols(); ++j)
    if (Utl[j] > lp.c[j]) return false;
  Scalar primal = 0, dual = 0;
  for (Eigen::Index j = 0; j < lp.cols(); ++j) primal += lp.c[j] * sol.v[j];
  for (Eigen::Index i = 0; i < lp.rows(); ++i) dual += lp.w[i] * sol.dual[i];
  return primal == dual && primal == sol.value;
}

/// Line format: "min c_1 ... c_t", then one "row a_1 ... a_t = w_i" per constraint.
template <typename Scalar>
void dump_lp(std::ostream& os, const StandardLp<Scalar>& lp) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dense(lp.U);
  os << "min";
  for (Eigen::Index j = 0; j < lp.cols(); ++j) os << ' ' << lp.c[j];
  os << '\n';
  for (Eigen::Index i = 0; i < lp.rows(); ++i) {
    os << "row";
    for (Eigen::Index j = 0; j < lp.cols(); ++j) os << ' ' << dense(i, j);
    os << " = " << lp.w[i] << '\n';
  }
}

}  // namespace ncsparse
