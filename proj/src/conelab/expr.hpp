// Recursive-descent parser and evaluator for the experiment expression
// grammar: numbers, variables x1..xd, unary neg/abs/sin/cos/sqrt, binary
// + - * / and ^ with integer exponent. Precedence ^ > unary minus > * / >
// + -, binary operators left-associative, parentheses allowed. Parse
// errors report the byte offset; division by zero, sqrt of a negative and
// a non-integer exponent are evaluation errors.

#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace conelab {

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " at offset " + std::to_string(off)),
        offset(off) {}
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class UnOp { neg, abs, sin, cos, sqrt };
enum class BinOp { add, sub, mul, div, pow };

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct ExprNode {
  enum class Kind { number, variable, unary, binary };
  Kind kind;
  double number = 0.0;
  int var_index = 0;  // 0-based; variable x1 has index 0
  UnOp un_op = UnOp::neg;
  BinOp bin_op = BinOp::add;
  ExprPtr lhs, rhs;  // unary uses lhs only
};

// declared_dim < 0 infers the dimension from the largest variable index;
// otherwise any variable beyond declared_dim is an unknown-variable error.
ExprPtr parse_expression(std::string_view text, int declared_dim = -1);

// Largest variable index used, as a dimension (>= 1 even for constants).
int expression_dimension(const ExprNode& e);

double eval(const ExprNode& e, std::span<const double> vars);

// Fully parenthesized; parses back to a structurally equal tree.
std::string pretty_print(const ExprNode& e);

bool structurally_equal(const ExprNode& a, const ExprNode& b);

}  // namespace conelab
