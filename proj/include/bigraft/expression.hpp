#pragma once

#include <string_view>
#include <vector>

#include "bigraft/linear.hpp"
#include "bigraft/ops.hpp"

namespace bigraft {

// Syntax tree of a forest expression. Precedence from tightest to loosest:
// composition "F @ (A1, ..., An)", the grafts "|>" and "<|", concatenation
// "*", then "+" and "-". Binary operators associate to the left. A term may
// start with an integer scalar; a bare integer n stands for n times 1.
struct Expression {
    enum class Kind { Literal, Scale, Add, Subtract, Negate, Product, Compose };

    Kind kind = Kind::Literal;
    Forest literal;                  // Literal
    Scalar scalar;                   // Scale
    Op op = Op::Concat;              // Product
    std::vector<Expression> children;
    std::size_t position = 0;        // offset in the source text
};

Expression parse_expression(std::string_view text);

// Throws ParseError for malformed text and DomainError when an operand lies
// outside an operation's domain, e.g. a graft with 1.
LinComb evaluate(const Expression& e);
LinComb evaluate(std::string_view text);

}  // namespace bigraft
