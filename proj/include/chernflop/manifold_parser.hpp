#pragma once

#include <string>
#include <variant>

#include "chernflop/bordism.hpp"
#include "chernflop/flops.hpp"

namespace chernflop {

/// Result of the manifold mini-language: a scalar, an explicit manifold
/// model, or a rational bordism class known only through its Chern numbers.
using Value = std::variant<Rational, Manifold, BordismVector>;

/// Grammar (left-associative binary operators, usual precedence):
///   expr    := term (("+" | "-") term)*
///   term    := factor (("*" | "x") factor)*
///   factor  := unary ("^" integer)?
///   unary   := "-" unary | primary
///   primary := integer ("/" integer)? | "P(" n ")" | "K3" | "S6" | "X4"
///            | "TW(Z=" base "; A=" lines "; B=" lines ")"
///            | "SU(Z=" base "; L1=" line "; L2=" line "; L3=" line ")"
///            | "(" expr ")"
///   lines   := line "+" line,   line := "O(" d ("," d)* ")"
/// "x" and "*" both denote the product; sums and scalar multiples yield
/// bordism classes.
Value parse_manifold_expression(const std::string& text);

/// Parses "O(1)+O(0)" style rank-2 data against a base.
std::array<CohElement, 2> parse_line_pair(const std::string& text, const Manifold& base);
CohElement parse_line(const std::string& text, const Manifold& base);

BordismVector to_vector(const Value& v);
int dimension(const Value& v);
std::string describe(const Value& v);

}  // namespace chernflop
