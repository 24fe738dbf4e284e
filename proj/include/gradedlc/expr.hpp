#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gradedlc/weyl.hpp"

namespace gradedlc {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operator expressions:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' INTEGER)?
//   atom   := INTEGER | 'X'k | 'D'k | 'E'k | 'Y' | 'dY' | '(' expr ')'
//
// k is a positive integer. Ek stands for Xk*Dk. Whitespace is ignored. The
// algebra is inferred as the largest k used, with Y/dY iff either appears,
// unless one is given explicitly.
WeylElement parse_weyl(std::string_view text, std::optional<WeylAlgebra> algebra = std::nullopt);

/// Prints terms highest total degree first, e.g. "X1^2*D1^2 + 4*X1*D1 + 2".
std::string to_string(const WeylElement& e);

}  // namespace gradedlc
