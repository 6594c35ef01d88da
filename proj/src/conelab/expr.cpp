#include "conelab/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace conelab {

namespace {

class Parser {
public:
  Parser(std::string_view text, int declared_dim)
      : text_(text), declared_dim_(declared_dim) {}

  ExprPtr run() {
    ExprPtr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return e;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int declared_dim_;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr parse_sum() {
    ExprPtr node = parse_term();
    for (;;) {
      if (consume('+'))
        node = make_bin(BinOp::add, std::move(node), parse_term());
      else if (consume('-'))
        node = make_bin(BinOp::sub, std::move(node), parse_term());
      else
        return node;
    }
  }

  ExprPtr parse_term() {
    ExprPtr node = parse_unary();
    for (;;) {
      if (consume('*'))
        node = make_bin(BinOp::mul, std::move(node), parse_unary());
      else if (consume('/'))
        node = make_bin(BinOp::div, std::move(node), parse_unary());
      else
        return node;
    }
  }

  // Unary minus binds looser than ^: -x^2 parses as -(x^2).
  ExprPtr parse_unary() {
    if (consume('-')) {
      ExprPtr n = std::make_unique<ExprNode>();
      n->kind = ExprNode::Kind::unary;
      n->un_op = UnOp::neg;
      n->lhs = parse_unary();
      return n;
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr node = parse_atom();
    while (consume('^'))
      node = make_bin(BinOp::pow, std::move(node), parse_exponent());
    return node;
  }

  // Allows a sign on the exponent operand: x^-2.
  ExprPtr parse_exponent() {
    if (consume('-')) {
      ExprPtr n = std::make_unique<ExprNode>();
      n->kind = ExprNode::Kind::unary;
      n->un_op = UnOp::neg;
      n->lhs = parse_exponent();
      return n;
    }
    return parse_atom();
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size())
      throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)))
      return parse_ident();
    if (c == '(') {
      ++pos_;
      ExprPtr e = parse_sum();
      if (!consume(')'))
        throw ParseError("expected ')'", pos_);
      return e;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  ExprPtr parse_number() {
    const char* begin = text_.data() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin)
      throw ParseError("malformed number", pos_);
    pos_ += static_cast<std::size_t>(end - begin);
    ExprPtr n = std::make_unique<ExprNode>();
    n->kind = ExprNode::Kind::number;
    n->number = v;
    return n;
  }

  ExprPtr parse_ident() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);

    if (name.size() >= 2 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(), [](char ch) {
          return std::isdigit(static_cast<unsigned char>(ch));
        })) {
      const int idx = std::atoi(std::string(name.substr(1)).c_str());
      if (idx < 1)
        throw ParseError("variable indices start at x1", start);
      if (declared_dim_ >= 0 && idx > declared_dim_)
        throw ParseError("unknown variable '" + std::string(name) +
                             "' for dimension " + std::to_string(declared_dim_),
                         start);
      ExprPtr n = std::make_unique<ExprNode>();
      n->kind = ExprNode::Kind::variable;
      n->var_index = idx - 1;
      return n;
    }

    UnOp op;
    if (name == "sin") op = UnOp::sin;
    else if (name == "cos") op = UnOp::cos;
    else if (name == "abs") op = UnOp::abs;
    else if (name == "sqrt") op = UnOp::sqrt;
    else
      throw ParseError("unknown identifier '" + std::string(name) + "'", start);

    if (!consume('('))
      throw ParseError("expected '(' after function name", pos_);
    ExprPtr n = std::make_unique<ExprNode>();
    n->kind = ExprNode::Kind::unary;
    n->un_op = op;
    n->lhs = parse_sum();
    if (!consume(')'))
      throw ParseError("expected ')'", pos_);
    return n;
  }

  static ExprPtr make_bin(BinOp op, ExprPtr l, ExprPtr r) {
    ExprPtr n = std::make_unique<ExprNode>();
    n->kind = ExprNode::Kind::binary;
    n->bin_op = op;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }
};

}  // namespace

ExprPtr parse_expression(std::string_view text, int declared_dim) {
  return Parser(text, declared_dim).run();
}

int expression_dimension(const ExprNode& e) {
  int d = 1;
  switch (e.kind) {
    case ExprNode::Kind::number:
      return 1;
    case ExprNode::Kind::variable:
      return e.var_index + 1;
    case ExprNode::Kind::unary:
      return expression_dimension(*e.lhs);
    case ExprNode::Kind::binary:
      d = expression_dimension(*e.lhs);
      return std::max(d, expression_dimension(*e.rhs));
  }
  return d;
}

double eval(const ExprNode& e, std::span<const double> vars) {
  switch (e.kind) {
    case ExprNode::Kind::number:
      return e.number;
    case ExprNode::Kind::variable:
      if (static_cast<std::size_t>(e.var_index) >= vars.size())
        throw EvalError("variable index out of range");
      return vars[static_cast<std::size_t>(e.var_index)];
    case ExprNode::Kind::unary: {
      const double v = eval(*e.lhs, vars);
      switch (e.un_op) {
        case UnOp::neg: return -v;
        case UnOp::abs: return std::abs(v);
        case UnOp::sin: return std::sin(v);
        case UnOp::cos: return std::cos(v);
        case UnOp::sqrt:
          if (v < 0)
            throw EvalError("sqrt of a negative value");
          return std::sqrt(v);
      }
      break;
    }
    case ExprNode::Kind::binary: {
      const double a = eval(*e.lhs, vars);
      const double b = eval(*e.rhs, vars);
      switch (e.bin_op) {
        case BinOp::add: return a + b;
        case BinOp::sub: return a - b;
        case BinOp::mul: return a * b;
        case BinOp::div:
          if (b == 0.0)
            throw EvalError("division by zero");
          return a / b;
        case BinOp::pow: {
          if (b != std::floor(b) || std::abs(b) > 1e9)
            throw EvalError("exponent must be an integer");
          return std::pow(a, b);
        }
      }
      break;
    }
  }
  throw EvalError("malformed expression tree");
}

std::string pretty_print(const ExprNode& e) {
  switch (e.kind) {
    case ExprNode::Kind::number: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", e.number);
      return buf;
    }
    case ExprNode::Kind::variable:
      return "x" + std::to_string(e.var_index + 1);
    case ExprNode::Kind::unary: {
      const char* fn = nullptr;
      switch (e.un_op) {
        case UnOp::neg: return "(-" + pretty_print(*e.lhs) + ")";
        case UnOp::abs: fn = "abs"; break;
        case UnOp::sin: fn = "sin"; break;
        case UnOp::cos: fn = "cos"; break;
        case UnOp::sqrt: fn = "sqrt"; break;
      }
      return std::string(fn) + "(" + pretty_print(*e.lhs) + ")";
    }
    case ExprNode::Kind::binary: {
      const char* op = "?";
      switch (e.bin_op) {
        case BinOp::add: op = "+"; break;
        case BinOp::sub: op = "-"; break;
        case BinOp::mul: op = "*"; break;
        case BinOp::div: op = "/"; break;
        case BinOp::pow: op = "^"; break;
      }
      return "(" + pretty_print(*e.lhs) + op + pretty_print(*e.rhs) + ")";
    }
  }
  return "?";
}

bool structurally_equal(const ExprNode& a, const ExprNode& b) {
  if (a.kind != b.kind)
    return false;
  switch (a.kind) {
    case ExprNode::Kind::number:
      return a.number == b.number;
    case ExprNode::Kind::variable:
      return a.var_index == b.var_index;
    case ExprNode::Kind::unary:
      return a.un_op == b.un_op && structurally_equal(*a.lhs, *b.lhs);
    case ExprNode::Kind::binary:
      return a.bin_op == b.bin_op && structurally_equal(*a.lhs, *b.lhs) &&
             structurally_equal(*a.rhs, *b.rhs);
  }
  return false;
}

}  // namespace conelab
