#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pclie/special.hpp"

namespace pclie {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ExprTerm {
  Rational coefficient;
  LieTree tree;
};

/// A sum of rational multiples of Lie monomials.
struct ExprAst {
  std::vector<ExprTerm> terms;

  LiePoly evaluate() const;
};

/// Grammar (whitespace insensitive):
///   expr     := '0' | [sign] term (sign term)*
///   term     := [rational ['*']] factor
///   factor   := symbol | '(' factor factor ')' | '[' word ']'
///   rational := integer ['/' positive-integer]
/// '[' word ']' denotes the NLSW of an ALSW, which makes rendered LiePolys
/// parse back to themselves.
ExprAst parse_expr(std::string_view text, const Alphabet& alphabet);

LiePoly parse_lie_poly(std::string_view text, const Alphabet& alphabet);

struct RuleSet {
  Alphabet alphabet;
  std::vector<Rule> rules;
};

/// First line the alphabet declaration, then one Lie expression per line,
/// each normalized to a monic rule. Blank lines and '#' comments are
/// ignored.
RuleSet parse_rules(std::string_view text);

}  // namespace pclie
