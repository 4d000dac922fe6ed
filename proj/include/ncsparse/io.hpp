#pragma once

#include "ncsparse/sparsify.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncsparse {

/// Malformed problem or certificate input, with a 1-based position.
class InputError : public std::invalid_argument {
 public:
  InputError(const std::string& what, std::size_t line, std::size_t column)
      : std::invalid_argument(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

// Line-oriented problem file, '#' starts a comment:
//   vars: a, as, ad, ads, b
//   order: deglex          (only value)
//   modorder: dopot        (only value)
//   gen: a*b - 1           (one per generator, in order)
//   claim: b - ad
//   bound: 8               (degree bound, >= 1)
//   weights: uniform | degree
//   prune: on | off
//   seed: 0
//   time_budget: 60        (seconds, 0 = unlimited)
//   alpha: ad*e_1 - b*e_1  (optional initial representation)
struct ProblemFile {
  GeneratorSystem system;
  NcPoly claim;
  int bound = 0;
  WeightMode weights = WeightMode::Uniform;
  bool prune = true;
  std::uint64_t seed = 0;
  double time_budget = 0;
  std::optional<ModuleElement> alpha;
};

/// Throws InputError.
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::filesystem::path& path);

/// Deterministic JSON text (fixed key order, two-space indent, trailing newline).
std::string certificate_json(const SparseCertificate& cert, const GeneratorSystem& sys);

struct VerifyResult {
  bool ok = false;
  std::string reason;
};

/// Re-expands a stored certificate and checks the claim, the stored weights
/// and the signature bound. Malformed JSON yields ok = false with a reason.
VerifyResult verify_certificate_json(std::string_view json_text);

}  // namespace ncsparse
