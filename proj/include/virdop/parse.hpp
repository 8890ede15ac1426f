#pragma once

#include <string>

#include "virdop/diffop.hpp"

namespace virdop {

// Recursive-descent front end for the canonical text grammar:
//
//   expr   := ["+"|"-"] term (("+"|"-") term)*
//   term   := factor (("*"|"/")? factor)*        (implicit "*" allowed)
//   factor := atom ("^" sint)?
//   atom   := num | "i" | param | "z" | "q" | "d" | "dq"
//           | "O" "(" var "^" sint ")" | "(" expr ")"
//
// "d" composes non-commutatively at parse time, so "d*z" yields "z*d + 1".
// Division and negative exponents are rejected on subexpressions containing
// "d". Identifiers outside the reserved set become session parameters.
DiffOp parse_op(const std::string &text, const RingSpec &ring);

// parse_op restricted to order-0 results
CoeffElem parse_coeff(const std::string &text, const RingSpec &ring);

// constant expressions only
Scalar parse_scalar(const std::string &text);

} // namespace virdop
