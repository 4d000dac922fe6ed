#pragma once

#include "ncsparse/poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncsparse {

/// Malformed polynomial text. offset() is the 0-based byte position of the problem.
class SyntaxError : public std::invalid_argument {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar (whitespace insignificant):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' posint]
//   atom   := var | coeff | '(' poly ')'
//   coeff  := int ['/' int]
NcPoly parse_poly(std::string_view text, const VariableTable& vars);

/// Canonical text, terms in decreasing deglex order, e.g. "x*y - 1/2*y*x + 3".
std::string format_poly(const NcPoly& f, const VariableTable& vars);

}  // namespace ncsparse
