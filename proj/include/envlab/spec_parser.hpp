#ifndef ENVLAB_SPEC_PARSER_HPP
#define ENVLAB_SPEC_PARSER_HPP

#include <optional>
#include <string>

#include "envlab/lie_algebra.hpp"

namespace envlab {

struct ParseError : Error {
  ParseError(std::string msg, int line, int col)
      : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
        line(line), col(col) {}
  int line, col;
};

struct AlgebraSpec {
  LieAlgebra algebra;
  std::optional<WeightStructure> weights;
};

/// Text format, one item per line, '#' starts a comment:
///   name <identifier>
///   dim <N>
///   weights <grading|filtration> w1 w2 ... wN     (optional)
///   [i,j] = c e_k + c e_k ...                     (i < j, rationals as p/q)
/// Unknown keys are rejected. Coefficient syntax: "e3", "2 e3", "-1/2 e1
/// + e2", "0" for an explicitly zero bracket.
AlgebraSpec parse_spec_text(const std::string& text);
AlgebraSpec parse_spec_file(const std::string& path);

}  // namespace envlab

#endif
