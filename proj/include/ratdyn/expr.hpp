#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ratdyn/ratfunc.hpp"

namespace ratdyn::expr {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Op { Number, Var, Neg, Add, Sub, Mul, Div, Pow };
    Op op = Op::Number;
    Rational value;   // Number
    long exponent = 0;   // Pow
    NodePtr lhs, rhs;
    std::size_t pos = 0;
};

// Grammar, loosest first:
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' unary)?
//   atom    := integer | 'x' | '(' sum ')'
// Exponents must reduce to integer constants. Throws SyntaxError with the
// byte offset of the problem.
NodePtr parse(std::string_view text);

// Division by the zero function raises ZeroDenominator.
RatFunc evaluate(const NodePtr& node);

inline RatFunc parse_ratfunc(std::string_view text) { return evaluate(parse(text)); }

// Fully parenthesized rendering that parses back to an equal value.
std::string print(const NodePtr& node);

bool structurally_equal(const NodePtr& a, const NodePtr& b);

} // namespace ratdyn::expr
