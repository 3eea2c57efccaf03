#include "rootfam/jet.hpp"

#include <algorithm>

namespace rootfam {

namespace {

const EvalContext& ctx_of(const Jet& j) { return j[0].context(); }

void require_same_order(const Jet& a, const Jet& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::ValidationError, "jets of different orders cannot be combined");
  }
}

}  // namespace

Jet Jet::constant(const Scalar& c, int order) {
  std::vector<Scalar> coeffs(static_cast<std::size_t>(order) + 1, Scalar(c.context()));
  coeffs[0] = c;
  return Jet(std::move(coeffs));
}

Jet Jet::variable(const Scalar& x, int order) {
  Jet j = constant(x, order);
  if (order >= 1) j.coeffs_[1] = Scalar(x.context(), 1);
  return j;
}

Scalar Jet::derivative(int k) const {
  Real factorial(1, coeffs_[0].precision());
  for (int j = 2; j <= k; ++j) factorial *= Real(j, factorial.precision());
  return coeffs_[static_cast<std::size_t>(k)] * Scalar(coeffs_[0].context(), factorial);
}

Jet operator+(const Jet& a, const Jet& b) {
  require_same_order(a, b);
  std::vector<Scalar> c;
  c.reserve(a.coeffs_.size());
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c.push_back(a.coeffs_[k] + b.coeffs_[k]);
  return Jet(std::move(c));
}

Jet operator-(const Jet& a, const Jet& b) {
  require_same_order(a, b);
  std::vector<Scalar> c;
  c.reserve(a.coeffs_.size());
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c.push_back(a.coeffs_[k] - b.coeffs_[k]);
  return Jet(std::move(c));
}

Jet operator-(const Jet& a) {
  std::vector<Scalar> c;
  c.reserve(a.coeffs_.size());
  for (const Scalar& s : a.coeffs_) c.push_back(-s);
  return Jet(std::move(c));
}

Jet operator*(const Jet& a, const Jet& b) {
  require_same_order(a, b);
  const std::size_t n = a.coeffs_.size();
  std::vector<Scalar> c(n, Scalar(ctx_of(a)));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j <= k; ++j) c[k] += a.coeffs_[j] * b.coeffs_[k - j];
  }
  return Jet(std::move(c));
}

Jet operator/(const Jet& a, const Jet& b) {
  require_same_order(a, b);
  if (b.coeffs_[0].is_zero()) throw Error(ErrorCode::DivisionByZero, "divisor vanishes at the expansion point");
  const std::size_t n = a.coeffs_.size();
  std::vector<Scalar> c(n, Scalar(ctx_of(a)));
  for (std::size_t k = 0; k < n; ++k) {
    Scalar acc = a.coeffs_[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= b.coeffs_[j] * c[k - j];
    c[k] = acc / b.coeffs_[0];
  }
  return Jet(std::move(c));
}

// e' = a' e  =>  k e_k = sum_{j=1..k} j a_j e_{k-j}
Jet jet_exp(const Jet& a) {
  const std::size_t n = a.coeffs_.size();
  std::vector<Scalar> e(n, Scalar(ctx_of(a)));
  e[0] = exp(a.coeffs_[0]);
  for (std::size_t k = 1; k < n; ++k) {
    Scalar acc(ctx_of(a));
    for (std::size_t j = 1; j <= k; ++j) acc += a.coeffs_[j].scaled(static_cast<long>(j)) * e[k - j];
    e[k] = acc / Scalar(ctx_of(a), static_cast<long>(k));
  }
  return Jet(std::move(e));
}

// a l' = a'  =>  l_k = (a_k - (1/k) sum_{j=1..k-1} j l_j a_{k-j}) / a_0
Jet jet_log(const Jet& a) {
  if (a.coeffs_[0].is_zero()) throw Error(ErrorCode::DomainError, "log argument vanishes");
  const std::size_t n = a.coeffs_.size();
  std::vector<Scalar> l(n, Scalar(ctx_of(a)));
  l[0] = log(a.coeffs_[0]);
  for (std::size_t k = 1; k < n; ++k) {
    Scalar acc(ctx_of(a));
    for (std::size_t j = 1; j < k; ++j) acc += l[j].scaled(static_cast<long>(j)) * a.coeffs_[k - j];
    l[k] = (a.coeffs_[k] - acc / Scalar(ctx_of(a), static_cast<long>(k))) / a.coeffs_[0];
  }
  return Jet(std::move(l));
}

namespace {

// s' = a' c, c' = -a' s
std::pair<std::vector<Scalar>, std::vector<Scalar>> sin_cos_series(std::span<const Scalar> a) {
  const EvalContext& ctx = a[0].context();
  const std::size_t n = a.size();
  std::vector<Scalar> s(n, Scalar(ctx)), c(n, Scalar(ctx));
  s[0] = sin(a[0]);
  c[0] = cos(a[0]);
  for (std::size_t k = 1; k < n; ++k) {
    Scalar ss(ctx), cc(ctx);
    for (std::size_t j = 1; j <= k; ++j) {
      const Scalar ja = a[j].scaled(static_cast<long>(j));
      ss += ja * c[k - j];
      cc += ja * s[k - j];
    }
    const Scalar kk(ctx, static_cast<long>(k));
    s[k] = ss / kk;
    c[k] = -(cc / kk);
  }
  return {std::move(s), std::move(c)};
}

}  // namespace

Jet jet_sin(const Jet& a) { return Jet(sin_cos_series(a.coeffs_).first); }

Jet jet_cos(const Jet& a) { return Jet(sin_cos_series(a.coeffs_).second); }

// s^2 = a  =>  s_k = (a_k - sum_{j=1..k-1} s_j s_{k-j}) / (2 s_0)
Jet jet_sqrt(const Jet& a) {
  const std::size_t n = a.coeffs_.size();
  std::vector<Scalar> s(n, Scalar(ctx_of(a)));
  s[0] = sqrt(a.coeffs_[0]);
  if (n > 1 && s[0].is_zero()) throw Error(ErrorCode::DomainError, "sqrt is not differentiable at 0");
  for (std::size_t k = 1; k < n; ++k) {
    Scalar acc = a.coeffs_[k];
    for (std::size_t j = 1; j < k; ++j) acc -= s[j] * s[k - j];
    s[k] = acc / s[0].scaled(2);
  }
  return Jet(std::move(s));
}

Jet jet_pow(const Jet& base, long exponent) {
  const int order = base.order();
  if (exponent == 0) return Jet::constant(Scalar(ctx_of(base), 1), order);
  if (exponent < 0) return Jet::constant(Scalar(ctx_of(base), 1), order) / jet_pow(base, -exponent);
  Jet acc = Jet::constant(Scalar(ctx_of(base), 1), order);
  Jet sq = base;
  for (unsigned long n = static_cast<unsigned long>(exponent); n != 0; n >>= 1) {
    if (n & 1U) acc = acc * sq;
    if (n > 1) sq = sq * sq;
  }
  return acc;
}

namespace {

Jet eval_node(const Expr& e, const Scalar& x, int order);

Jet eval_checked(const Expr& e, const Scalar& x, int order) {
  try {
    return eval_node(e, x, order);
  } catch (const EvaluationError&) {
    throw;
  } catch (const Error& err) {
    if (err.code() == ErrorCode::DivisionByZero || err.code() == ErrorCode::DomainError) {
      throw EvaluationError(err.code(), to_string(e), err.what());
    }
    throw;
  }
}

Jet eval_node(const Expr& e, const Scalar& x, int order) {
  const auto& data = e.node().data;
  if (const auto* c = std::get_if<ConstNode>(&data)) return Jet::constant(c->value(x.context()), order);
  if (std::holds_alternative<VarNode>(data)) return Jet::variable(x, order);
  if (const auto* u = std::get_if<UnaryNode>(&data)) {
    const Jet a = eval_checked(u->operand, x, order);
    switch (u->op) {
      case UnaryOp::Neg: return -a;
      case UnaryOp::Sin: return jet_sin(a);
      case UnaryOp::Cos: return jet_cos(a);
      case UnaryOp::Exp: return jet_exp(a);
      case UnaryOp::Sqrt: return jet_sqrt(a);
      case UnaryOp::Log: return jet_log(a);
    }
  }
  const auto& b = std::get<BinaryNode>(data);
  const Jet lhs = eval_checked(b.lhs, x, order);
  if (b.op == BinaryOp::Pow) {
    if (b.integer_exponent) return jet_pow(lhs, *b.integer_exponent);
    // Constant base, arbitrary exponent: b^y = exp(y log b) on the principal branch.
    const Jet rhs = eval_checked(b.rhs, x, order);
    return jet_exp(rhs * Jet::constant(log(lhs[0]), order));
  }
  const Jet rhs = eval_checked(b.rhs, x, order);
  switch (b.op) {
    case BinaryOp::Add: return lhs + rhs;
    case BinaryOp::Sub: return lhs - rhs;
    case BinaryOp::Mul: return lhs * rhs;
    case BinaryOp::Div: return lhs / rhs;
    case BinaryOp::Pow: break;
  }
  throw Error(ErrorCode::ValidationError, "unknown binary operation");
}

}  // namespace

Jet jet_eval(const Expr& expr, const Scalar& x, int order) {
  if (order < 0 || order > Jet::kMaxOrder) {
    throw Error(ErrorCode::ValidationError,
                "jet order must be in [0, " + std::to_string(Jet::kMaxOrder) + "], got " +
                    std::to_string(order));
  }
  return eval_checked(expr, x, order);
}

}  // namespace rootfam
