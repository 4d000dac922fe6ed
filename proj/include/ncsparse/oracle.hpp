#pragma once

#include "ncsparse/bimodule.hpp"

#include <optional>
#include <vector>

namespace ncsparse {

/// Columns (mu, expand(mu)) of a brute-force membership system and its right-hand side.
struct DenseSystem {
  std::vector<ModuleMonomial> monomials;
  std::vector<NcPoly> expansions;
  NcPoly rhs;

  std::size_t size() const { return monomials.size(); }
  /// Number of pairwise distinct expansions a*f_i*b among the columns.
  std::size_t distinct_expansions() const;
  /// Rows indexed by the union of column supports and supp(rhs), descending deglex.
  std::vector<Word> row_monomials() const;
  SparseRationalMatrix matrix(const std::vector<Word>& rows) const;
  RationalVector rhs_vector(const std::vector<Word>& rows) const;
};

/// deg(f) + N * max_i degdiff(f_i).
int degree_bound(const NcPoly& f, const GeneratorSystem& sys, int N);

/// Columns are all a e_i b with deg(a f_i b) <= D. Throws BoundTooLarge above `cap`.
DenseSystem dense_system(const NcPoly& f, const GeneratorSystem& sys, int D,
                         std::size_t cap = kDefaultEnumerationCap);

/// A y with A y = b and at most N nonzeros, or nullopt. Subsets are tried by
/// increasing size and, within a size, in lexicographic order, so a returned y
/// has minimal support and is the lexicographically first such solution.
std::optional<RationalVector> min_rvls(const SparseRationalMatrix& A, const RationalVector& b, int N);

/// Sparsest representation of f with at most N terms, or nullopt.
std::optional<ModuleElement> algorithm1(const NcPoly& f, const GeneratorSystem& sys, int N,
                                        std::size_t cap = kDefaultEnumerationCap);

/// Reduced echelon basis of the syzygies supported strictly below the bound:
/// ascending, distinct signatures with coefficient 1, and no signature occurs
/// in another element.
std::vector<ModuleElement> dense_kernel(const GeneratorSystem& sys, const SignatureBound& bound,
                                        std::size_t cap = kDefaultEnumerationCap);

}  // namespace ncsparse
