#include "ncsparse/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace ncsparse {

namespace {

struct PolyHash {
  std::size_t operator()(const NcPoly& f) const noexcept {
    std::size_t h = f.size();
    for (const auto& t : f.terms()) {
      h ^= WordHash{}(t.word) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= std::hash<long>{}(t.coeff.get_num().get_si()) * 31 + t.coeff.get_den().get_si();
    }
    return h;
  }
};

// Solves A[:, cols] y = b exactly by Gaussian elimination; nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::map<int, Rational>>& cols,
                                                   const std::map<int, Rational>& b) {
  std::set<int> row_set;
  for (const auto& c : cols)
    for (const auto& [r, v] : c) row_set.insert(r);
  for (const auto& [r, v] : b) row_set.insert(r);
  std::vector<int> rows(row_set.begin(), row_set.end());
  const std::size_t m = rows.size(), k = cols.size();
  std::unordered_map<int, std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i) pos[rows[i]] = i;
  std::vector<std::vector<Rational>> M(m, std::vector<Rational>(k + 1, 0));
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& [r, v] : cols[j]) M[pos[r]][j] = v;
  for (const auto& [r, v] : b) M[pos[r]][k] = v;

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t j = 0; j < k && row < m; ++j) {
    std::size_t p = row;
    while (p < m && M[p][j] == 0) ++p;
    if (p == m) continue;
    std::swap(M[p], M[row]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || M[i][j] == 0) continue;
      Rational f = M[i][j] / M[row][j];
      for (std::size_t c = j; c <= k; ++c) M[i][c] -= f * M[row][c];
    }
    pivot_col.push_back(j);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (M[i][k] != 0) return std::nullopt;
  std::vector<Rational> y(k, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) y[pivot_col[i]] = M[i][k] / M[i][pivot_col[i]];
  return y;
}

class SubsetSearch {
 public:
  SubsetSearch(const SparseRationalMatrix& A, const RationalVector& b) : n_(A.cols()) {
    cols_.resize(n_);
    for (Eigen::Index j = 0; j < A.outerSize(); ++j)
      for (SparseRationalMatrix::InnerIterator it(A, j); it; ++it)
        if (it.value() != 0) cols_[j][static_cast<int>(it.row())] = it.value();
    for (Eigen::Index i = 0; i < b.size(); ++i)
      if (b[i] != 0) b_[static_cast<int>(i)] = b[i];
    for (const auto& [r, v] : b_) last_cover_[r] = -1;
    for (int j = 0; j < n_; ++j)
      for (const auto& [r, v] : cols_[j])
        if (b_.count(r)) last_cover_[r] = j;
  }

  std::optional<std::vector<std::pair<int, Rational>>> search(int size) {
    chosen_.clear();
    found_.reset();
    dfs(0, size);
    return found_;
  }

 private:
  bool covered(int r) const {
    for (int j : chosen_)
      if (cols_[j].count(r)) return true;
    return false;
  }

  void dfs(int start, int remaining) {
    if (found_) return;
    int uncovered = -1;
    for (const auto& [r, v] : b_)
      if (!covered(r)) {
        uncovered = r;
        break;
      }
    if (remaining == 0) {
      if (uncovered >= 0) return;
      std::vector<std::map<int, Rational>> cols;
      for (int j : chosen_) cols.push_back(cols_[j]);
      auto y = solve_columns(cols, b_);
      if (!y) return;
      std::vector<std::pair<int, Rational>> out;
      for (std::size_t i = 0; i < chosen_.size(); ++i) out.emplace_back(chosen_[i], (*y)[i]);
      found_ = std::move(out);
      return;
    }
    if (uncovered >= 0 && last_cover_[uncovered] < start) return;
    for (int j = start; j <= n_ - remaining; ++j) {
      chosen_.push_back(j);
      dfs(j + 1, remaining - 1);
      chosen_.pop_back();
      if (found_) return;
    }
  }

  int n_;
  std::vector<std::map<int, Rational>> cols_;
  std::map<int, Rational> b_;
  std::map<int, int> last_cover_;
  std::vector<int> chosen_;
  std::optional<std::vector<std::pair<int, Rational>>> found_;
};

}  // namespace

std::size_t DenseSystem::distinct_expansions() const {
  std::unordered_map<NcPoly, int, PolyHash> seen;
  seen.reserve(expansions.size());
  for (const auto& e : expansions) seen.emplace(e, 0);
  return seen.size();
}

std::vector<Word> DenseSystem::row_monomials() const {
  std::set<Word, DeglexLess> words;
  for (const auto& e : expansions)
    for (const auto& t : e.terms()) words.insert(t.word);
  for (const auto& t : rhs.terms()) words.insert(t.word);
  return {words.rbegin(), words.rend()};
}

SparseRationalMatrix DenseSystem::matrix(const std::vector<Word>& rows) const {
  std::unordered_map<Word, int, WordHash> index;
  for (std::size_t i = 0; i < rows.size(); ++i) index[rows[i]] = static_cast<int>(i);
  std::vector<Eigen::Triplet<Rational>> trips;
  for (std::size_t j = 0; j < expansions.size(); ++j)
    for (const auto& t : expansions[j].terms())
      trips.emplace_back(index.at(t.word), static_cast<int>(j), t.coeff);
  SparseRationalMatrix A(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(size()));
  A.setFromTriplets(trips.begin(), trips.end());
  return A;
}

RationalVector DenseSystem::rhs_vector(const std::vector<Word>& rows) const {
  RationalVector b = RationalVector::Zero(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) b[static_cast<Eigen::Index>(i)] = rhs.coeff(rows[i]);
  return b;
}

int degree_bound(const NcPoly& f, const GeneratorSystem& sys, int N) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (N < 0) throw std::invalid_argument("negative term count");
  return f.deg() + N * sys.max_degdiff();
}

DenseSystem dense_system(const NcPoly& f, const GeneratorSystem& sys, int D, std::size_t cap) {
  DenseSystem ds;
  ds.monomials = monomials_below(SignatureBound::degree(D + 1), sys, cap);
  ds.expansions.reserve(ds.monomials.size());
  for (const auto& m : ds.monomials) ds.expansions.push_back(sys.expand(m));
  ds.rhs = f;
  return ds;
}

std::optional<RationalVector> min_rvls(const SparseRationalMatrix& A, const RationalVector& b, int N) {
  if (A.rows() != b.size()) throw std::invalid_argument("dimension mismatch");
  SubsetSearch search(A, b);
  for (int k = 0; k <= N && k <= A.cols(); ++k) {
    if (auto hit = search.search(k)) {
      RationalVector y = RationalVector::Zero(A.cols());
      for (const auto& [j, v] : *hit) y[j] = v;
      return y;
    }
  }
  return std::nullopt;
}

std::optional<ModuleElement> algorithm1(const NcPoly& f, const GeneratorSystem& sys, int N,
                                        std::size_t cap) {
  if (f.is_zero()) return ModuleElement{};
  DenseSystem ds = dense_system(f, sys, degree_bound(f, sys, N), cap);
  auto rows = ds.row_monomials();
  auto y = min_rvls(ds.matrix(rows), ds.rhs_vector(rows), N);
  if (!y) return std::nullopt;
  std::vector<ModuleTerm> terms;
  for (Eigen::Index j = 0; j < y->size(); ++j)
    if ((*y)[j] != 0) terms.push_back({ds.monomials[j], (*y)[j]});
  return ModuleElement::from_terms(std::move(terms));
}

std::vector<ModuleElement> dense_kernel(const GeneratorSystem& sys, const SignatureBound& bound,
                                        std::size_t cap) {
  struct Pivot {
    NcPoly poly;
    ModuleElement label;
  };
  std::unordered_map<Word, Pivot, WordHash> pivots;
  std::vector<ModuleElement> kernel;
  for (const auto& mu : monomials_below(bound, sys, cap)) {
    NcPoly p = sys.expand(mu);
    ModuleElement label = ModuleElement::monomial(mu);
    while (!p.is_zero()) {
      auto it = pivots.find(p.lm());
      if (it == pivots.end()) break;
      Rational q = p.lc() / it->second.poly.lc();
      p.add_scaled(it->second.poly, -q, {}, {});
      label.add_scaled(it->second.label, -q, {}, {});
    }
    if (p.is_zero()) {
      kernel.push_back(std::move(label));
    } else {
      Word lm = p.lm();
      pivots.emplace(std::move(lm), Pivot{std::move(p), std::move(label)});
    }
  }
  std::unordered_map<ModuleMonomial, std::size_t, ModuleMonomialHash> by_sig;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    ModuleElement& k = kernel[i];
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t t = 1; t < k.terms().size(); ++t) {
        auto it = by_sig.find(k.terms()[t].monomial);
        if (it == by_sig.end()) continue;
        Rational c = k.terms()[t].coeff;
        k.add_scaled(kernel[it->second], -c, {}, {});
        changed = true;
        break;
      }
    }
    by_sig.emplace(k.signature(), i);
  }
  return kernel;
}

}  // namespace ncsparse
