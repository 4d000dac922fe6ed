#pragma once

#include "ncsparse/bimodule.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ncsparse {

class Timeout : public std::runtime_error {
 public:
  explicit Timeout(const std::string& what) : std::runtime_error(what) {}
};

/// f^[alpha]: a polynomial with the module element it expands from.
struct LabeledPoly {
  NcPoly poly;
  ModuleElement label;
  ModuleMonomial signature;
};

/// Groebner basis of the syzygy module up to `bound`, ascending signatures.
struct SyzygyBasis {
  std::vector<ModuleElement> elements;
  SignatureBound bound = SignatureBound::degree(0);

  std::size_t size() const { return elements.size(); }
  const ModuleMonomial& signature(std::size_t i) const { return elements[i].signature(); }
};

enum class AmbiguityKind { Overlap, Inclusion };

/// Two placements of leading words on a common superword:
/// first_left * u * first_right == superword == second_left * w * second_right.
struct Ambiguity {
  AmbiguityKind kind;
  Word first_left, first_right;
  Word second_left, second_right;
  Word superword;
};

/// Proper overlaps in both directions and proper inclusions of u and w.
/// Identical words yield no inclusion.
std::vector<Ambiguity> ambiguities(const Word& u, const Word& w);

struct SigGbOptions {
  /// Zero means unlimited.
  std::chrono::duration<double> time_budget{0};
  /// Cap on queued candidate signatures; BoundTooLarge beyond it.
  std::size_t max_candidates = 20'000'000;
};

struct SigGbStats {
  std::size_t candidates = 0;
  std::size_t processed_signatures = 0;
  std::size_t skipped_by_syzygy = 0;
  std::size_t rewriter_hits = 0;
  std::size_t reductions = 0;
  std::size_t trivial_syzygies = 0;
  std::size_t reduction_syzygies = 0;
};

struct SigGbResult {
  std::vector<LabeledPoly> gb;
  SyzygyBasis syz;
  SigGbStats stats;
};

/// Enumerates, by strictly increasing signature, a labeled Groebner basis of
/// the ideal and a Groebner basis of its syzygy module, truncated at `bound`.
/// Throws BoundTooLarge or Timeout.
SigGbResult syzygy_basis_up_to(const GeneratorSystem& sys, const SignatureBound& bound,
                               const SigGbOptions& options = {});

struct TraceResult {
  /// Set iff f reduced to zero; then expand(*representation) == f and its
  /// signature is below the bound.
  std::optional<ModuleElement> representation;
  /// Normal form of f; zero on success.
  NcPoly remainder;

  bool reduced_to_zero() const { return representation.has_value(); }
};

/// Reduces f by the labeled basis using only multiples with signature below
/// the bound, preferring the smallest signature, and accumulates the labels.
TraceResult trace_membership(const NcPoly& f, const std::vector<LabeledPoly>& gb,
                             const GeneratorSystem& sys, const SignatureBound& bound);

/// Rewrites the syzygy `gamma` by multiples a*h*b of basis elements whose
/// signature equals the current signature. Returns the final element, zero
/// iff gamma lies in the span the basis certifies.
ModuleElement reduce_by_syzygies(ModuleElement gamma, const SyzygyBasis& syz);

}  // namespace ncsparse
