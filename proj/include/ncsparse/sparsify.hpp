#pragma once

#include "ncsparse/bimodule.hpp"
#include "ncsparse/lp.hpp"
#include "ncsparse/sig_gb.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ncsparse {

class InconsistentInput : public std::invalid_argument {
 public:
  explicit InconsistentInput(const std::string& what) : std::invalid_argument(what) {}
};

class NotInIdealUpToBound : public std::runtime_error {
 public:
  explicit NotInIdealUpToBound(NcPoly remainder)
      : std::runtime_error("no cofactor representation found below the signature bound"),
        remainder_(std::move(remainder)) {}
  const NcPoly& remainder() const { return remainder_; }

 private:
  NcPoly remainder_;
};

/// Syzygies relevant for rewriting a representation, all below `bound`.
struct RelevantSyzygies {
  std::vector<ModuleElement> elements;
  SignatureBound bound = SignatureBound::degree(0);

  std::size_t size() const { return elements.size(); }
  /// supp(elements) together with supp(alpha), ascending.
  std::vector<ModuleMonomial> support_with(const ModuleElement& alpha) const;
};

/// Every placement a*gamma*b (gamma in syz, signature below the bound) whose
/// support meets the transitive support closure starting from supp(alpha).
RelevantSyzygies relevant_syzygies(const ModuleElement& alpha, const SyzygyBasis& syz);

enum class Norm { L0, L1 };

Rational norm(const ModuleElement& x, Norm n);

struct PruneOptions {
  Norm norm = Norm::L1;
  std::uint64_t seed = 0;
  /// Random span-swaps need ||removed|| > swap_ratio * ||added||.
  Rational swap_ratio = 2;
  int random_passes = 3;
  bool binomial_swaps = true;
  bool pairs = true;
};

struct PruneStats {
  std::size_t singletons_removed = 0;
  std::size_t pairs_removed = 0;
  std::size_t binomial_swaps = 0;
  std::size_t random_swaps = 0;
};

struct PruneResult {
  RelevantSyzygies syzygies;
  /// The starting representation after span-swaps; same expansion.
  ModuleElement alpha;
  PruneStats stats;
};

/// Removes syzygies that cannot lead to a lighter representation, keeping
/// (alpha + span V) intersecting the norm minimizers. Deterministic given the seed.
PruneResult prune(RelevantSyzygies V, ModuleElement alpha, const PruneOptions& options = {});

/// A y = b, column j the coefficients of expand(basis[j]) against row_monomials.
struct CofactorSystem {
  std::vector<ModuleMonomial> basis;
  SparseRationalMatrix matrix;
  RationalVector rhs;
  /// Descending deglex.
  std::vector<Word> row_monomials;

  /// sum_j y_j basis[j]
  ModuleElement element(const RationalVector& y) const;
  /// Coefficients of x on the basis; throws InconsistentInput if supp(x) is not contained in it.
  RationalVector coordinates(const ModuleElement& x) const;
};

/// Throws InconsistentInput when f has a monomial outside every column support.
CofactorSystem build_system(const ModuleElement& alpha, const RelevantSyzygies& V,
                            const GeneratorSystem& sys, const NcPoly& f);

/// Pure difference binomials only: f and every generator is a - b with
/// a, b words or zero and coefficients +-1.
bool tu_structural_check(const GeneratorSystem& sys, const NcPoly& f);

enum class WeightMode { Uniform, Degree };

/// Positive column weights of the objective sum_j w_j |y_j|.
struct Weights {
  WeightMode mode = WeightMode::Uniform;
  /// Explicit per-column weights; overrides mode when nonempty.
  std::vector<Rational> per_monomial;

  static Weights uniform() { return {}; }
  static Weights degree() { return {WeightMode::Degree, {}}; }
  bool is_uniform() const { return per_monomial.empty() && mode == WeightMode::Uniform; }
  RationalVector resolve(const std::vector<ModuleMonomial>& basis) const;
};

struct Minimum {
  RationalVector y;
  Rational value;
  std::size_t pivots = 0;
};

/// Exact weighted l1 minimization of A y = b through the standard-form LP
/// with U = (A | -A); the dual certificate is verified before returning.
/// Throws LpInfeasible, LpUnbounded.
Minimum minimize(const CofactorSystem& cs, const Weights& weights = {});

/// U = (A | -A), w = b, c = (weights; weights).
StandardLp<Rational> recast(const CofactorSystem& cs, const RationalVector& weights);

struct PipelineOptions {
  Weights weights;
  bool prune = true;
  std::uint64_t seed = 0;
  SigGbOptions gb;
};

struct CertificateStats {
  std::size_t gb_size = 0;
  std::size_t syzygy_basis_size = 0;
  std::size_t relevant_syzygies = 0;
  std::size_t basis_before_prune = 0;
  std::size_t syzygies_after_prune = 0;
  std::size_t basis_after_prune = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t nonzeros = 0;
  std::size_t lp_pivots = 0;
  std::size_t initial_l0 = 0;
  Rational initial_l1 = 0;
  Rational objective = 0;
  PruneStats prune;
};

struct SparseCertificate {
  NcPoly claim;
  ModuleElement representation;
  std::size_t l0_weight = 0;
  Rational l1_weight = 0;
  /// Set only when the pure-difference-binomial condition held and the
  /// objective was uniform.
  bool l0_optimal_up_to_bound = false;
  bool tu_structural = false;
  SignatureBound bound = SignatureBound::degree(0);
  CertificateStats stats;
};

/// Throws NotInIdealUpToBound, BoundTooLarge, Timeout, std::invalid_argument
/// for an alpha0 that does not expand to f or is not below the bound.
SparseCertificate sparsify_pipeline(const NcPoly& f, const GeneratorSystem& sys,
                                    const SignatureBound& bound,
                                    const std::optional<ModuleElement>& alpha0,
                                    const PipelineOptions& options = {});

/// As above with a precomputed syzygy basis (and labeled basis for tracing).
/// `system_out`, when given, receives the linear system that was minimized.
SparseCertificate sparsify_pipeline(const NcPoly& f, const GeneratorSystem& sys,
                                    const SigGbResult& basis,
                                    const std::optional<ModuleElement>& alpha0,
                                    const PipelineOptions& options = {},
                                    CofactorSystem* system_out = nullptr);

}  // namespace ncsparse
