#include "rootfam/expr.hpp"

#include <cctype>
#include <climits>

namespace rootfam {

namespace {

std::optional<long> integer_literal_value(const Expr& e) {
  const Node& n = e.node();
  if (const auto* u = std::get_if<UnaryNode>(&n.data)) {
    if (u->op != UnaryOp::Neg) return std::nullopt;
    auto inner = integer_literal_value(u->operand);
    if (!inner) return std::nullopt;
    return -*inner;
  }
  const auto* c = std::get_if<ConstNode>(&n.data);
  if (c == nullptr || c->kind != ConstKind::Number) return std::nullopt;
  const Real v = Real::parse(c->literal, 256);
  if (!v.is_integer() || abs(v) > Real(INT_MAX, 256)) return std::nullopt;
  return mpfr_get_si(v.get(), MPFR_RNDN);
}

std::shared_ptr<const Node> make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

}  // namespace

Expr Expr::number(std::string literal) {
  return Expr(make_node(Node{ConstNode{ConstKind::Number, std::move(literal)}, false}));
}

Expr Expr::imaginary_unit() { return Expr(make_node(Node{ConstNode{ConstKind::ImaginaryUnit, {}}, false})); }

Expr Expr::pi() { return Expr(make_node(Node{ConstNode{ConstKind::Pi, {}}, false})); }

Expr Expr::var() { return Expr(make_node(Node{VarNode{}, true})); }

Expr Expr::unary(UnaryOp op, Expr operand) {
  const bool has_var = operand.depends_on_x();
  return Expr(make_node(Node{UnaryNode{op, std::move(operand)}, has_var}));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  std::optional<long> int_exp;
  if (op == BinaryOp::Pow) {
    int_exp = integer_literal_value(rhs);
    if (lhs.depends_on_x() && !int_exp) {
      throw Error(ErrorCode::NonIntegerExponent,
                  "base '" + to_string(lhs) + "' depends on x but exponent '" + to_string(rhs) +
                      "' is not an integer literal");
    }
  }
  const bool has_var = lhs.depends_on_x() || rhs.depends_on_x();
  return Expr(make_node(Node{BinaryNode{op, std::move(lhs), std::move(rhs), int_exp}, has_var}));
}

bool Expr::depends_on_x() const noexcept { return node_->has_var; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node().data;
  const auto& y = b.node().data;
  if (x.index() != y.index()) return false;
  if (const auto* c = std::get_if<ConstNode>(&x)) {
    const auto& d = std::get<ConstNode>(y);
    return c->kind == d.kind && c->literal == d.literal;
  }
  if (std::holds_alternative<VarNode>(x)) return true;
  if (const auto* u = std::get_if<UnaryNode>(&x)) {
    const auto& v = std::get<UnaryNode>(y);
    return u->op == v.op && u->operand == v.operand;
  }
  const auto& l = std::get<BinaryNode>(x);
  const auto& r = std::get<BinaryNode>(y);
  return l.op == r.op && l.lhs == r.lhs && l.rhs == r.rhs;
}

Scalar ConstNode::value(const EvalContext& ctx) const {
  switch (kind) {
    case ConstKind::Number: return Scalar(ctx, Real::parse(literal, ctx.precision_bits));
    case ConstKind::ImaginaryUnit: return Scalar::imaginary_unit(ctx);
    case ConstKind::Pi: return Scalar::pi(ctx);
  }
  throw Error(ErrorCode::ValidationError, "unknown constant");
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError(pos_, "expression");
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "operator or end of input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(pos_, std::string("'") + c + "'");
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(BinaryOp::Add, lhs, parse_term());
      } else if (accept('-')) {
        lhs = Expr::binary(BinaryOp::Sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_factor();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(BinaryOp::Mul, lhs, parse_factor());
      } else if (accept('/')) {
        lhs = Expr::binary(BinaryOp::Div, lhs, parse_factor());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_factor() {
    if (accept('-')) return Expr::unary(UnaryOp::Neg, parse_factor());
    Expr base = parse_primary();
    if (accept('^')) {
      const std::size_t at = pos_;
      Expr exponent = parse_factor();
      try {
        return Expr::binary(BinaryOp::Pow, base, exponent);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NonIntegerExponent) throw;
        throw Error(ErrorCode::NonIntegerExponent,
                    "at offset " + std::to_string(at) + ": " + std::string(e.what()));
      }
    }
    return base;
  }

  Expr parse_primary() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError(pos_, "number, 'x', 'i', 'pi', function or '('");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "x") return Expr::var();
      if (word == "i") return Expr::imaginary_unit();
      if (word == "pi") return Expr::pi();
      std::optional<UnaryOp> fn;
      if (word == "sin") fn = UnaryOp::Sin;
      if (word == "cos") fn = UnaryOp::Cos;
      if (word == "exp") fn = UnaryOp::Exp;
      if (word == "sqrt") fn = UnaryOp::Sqrt;
      if (word == "log") fn = UnaryOp::Log;
      if (!fn) throw ParseError(start, "'x', 'i', 'pi' or one of sin, cos, exp, sqrt, log");
      expect('(');
      Expr arg = parse_expr();
      expect(')');
      return Expr::unary(*fn, arg);
    }
    throw ParseError(pos_, "number, 'x', 'i', 'pi', function or '('");
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ > from;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      if (!digits()) throw ParseError(pos_, "digit after '.'");
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (!digits()) throw ParseError(pos_, "exponent digits");
    }
    return Expr::number(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& expr) {
  const auto& data = expr.node().data;
  if (const auto* c = std::get_if<ConstNode>(&data)) {
    switch (c->kind) {
      case ConstKind::Number: return c->literal;
      case ConstKind::ImaginaryUnit: return "i";
      case ConstKind::Pi: return "pi";
    }
  }
  if (std::holds_alternative<VarNode>(data)) return "x";
  if (const auto* u = std::get_if<UnaryNode>(&data)) {
    const std::string arg = to_string(u->operand);
    switch (u->op) {
      case UnaryOp::Neg: return "(-" + arg + ")";
      case UnaryOp::Sin: return "sin(" + arg + ")";
      case UnaryOp::Cos: return "cos(" + arg + ")";
      case UnaryOp::Exp: return "exp(" + arg + ")";
      case UnaryOp::Sqrt: return "sqrt(" + arg + ")";
      case UnaryOp::Log: return "log(" + arg + ")";
    }
  }
  const auto& b = std::get<BinaryNode>(data);
  const char* op = " + ";
  switch (b.op) {
    case BinaryOp::Add: op = " + "; break;
    case BinaryOp::Sub: op = " - "; break;
    case BinaryOp::Mul: op = " * "; break;
    case BinaryOp::Div: op = " / "; break;
    case BinaryOp::Pow: op = "^"; break;
  }
  return "(" + to_string(b.lhs) + op + to_string(b.rhs) + ")";
}

}  // namespace rootfam
