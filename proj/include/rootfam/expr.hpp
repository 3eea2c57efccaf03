/**
 * @file expr.hpp
 * @brief Expression trees for univariate functions f(x) and their parser.
 *
 * Grammar (whitespace insignificant):
 *
 *     expr    := term { ("+" | "-") term } ;
 *     term    := factor { ("*" | "/") factor } ;
 *     factor  := "-" factor | primary [ "^" factor ] ;
 *     primary := NUMBER | "x" | "i" | "pi" | IDENT "(" expr ")" | "(" expr ")" ;
 *     IDENT   := "sin" | "cos" | "exp" | "sqrt" | "log" ;
 *
 * `^` is right-associative and binds tighter than unary minus, so `-x^2`
 * is `-(x^2)` and `2^-1` is `2^(-1)`.
 */
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "rootfam/numeric.hpp"

namespace rootfam {

enum class UnaryOp { Neg, Sin, Cos, Exp, Sqrt, Log };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class ConstKind { Number, ImaginaryUnit, Pi };

struct Node;

/// Immutable, cheaply copyable handle to an expression tree.
class Expr {
 public:
  static Expr number(std::string literal);
  static Expr imaginary_unit();
  static Expr pi();
  static Expr var();
  static Expr unary(UnaryOp op, Expr operand);
  /// Throws NonIntegerExponent for a pow whose base depends on x and whose
  /// exponent is not an integer literal.
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);

  const Node& node() const noexcept { return *node_; }
  bool depends_on_x() const noexcept;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ConstNode {
  ConstKind kind;
  std::string literal;  // decimal text for ConstKind::Number

  /// Value at the context precision (correctly rounded for literals).
  Scalar value(const EvalContext& ctx) const;
};

struct VarNode {};

struct UnaryNode {
  UnaryOp op;
  Expr operand;
};

struct BinaryNode {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
  /// Set for pow nodes whose exponent is an integer literal (possibly negated).
  std::optional<long> integer_exponent;
};

struct Node {
  std::variant<ConstNode, VarNode, UnaryNode, BinaryNode> data;
  bool has_var = false;
};

Expr parse_expression(std::string_view text);

/// Canonical, fully parenthesised text; parse_expression(to_string(e)) == e.
std::string to_string(const Expr& expr);

}  // namespace rootfam
