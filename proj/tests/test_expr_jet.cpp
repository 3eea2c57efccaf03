#include <random>

#include "doctest.h"
#include "oracle/corpus_derivatives.hpp"
#include "rootfam/function_model.hpp"
#include "support.hpp"

using namespace rootfam;
using testing::S;

namespace {

Expr num(const char* s) { return Expr::number(s); }
Expr x() { return Expr::var(); }

ErrorCode parse_error_code(const std::string& text) {
  try {
    (void)parse_expression(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ValidationError;
}

}  // namespace

TEST_CASE("parse a quadratic") {
  const Expr expected =
      Expr::binary(BinaryOp::Sub, Expr::binary(BinaryOp::Pow, x(), num("2")), num("1"));
  CHECK(parse_expression("x^2 - 1") == expected);
  CHECK(parse_expression("  x ^2-1 ") == expected);
  CHECK(to_string(expected) == "((x^2) - 1)");
}

TEST_CASE("parse the first corpus function") {
  using enum BinaryOp;
  const Expr sin_x = Expr::unary(UnaryOp::Sin, x());
  const Expr inner = Expr::unary(UnaryOp::Sin, Expr::binary(Div, x(), Expr::unary(UnaryOp::Sqrt, num("2"))));
  const Expr left = Expr::binary(Sub, Expr::binary(Mul, x(), sin_x),
                                 Expr::binary(Mul, num("2"), Expr::binary(Pow, inner, num("2"))));
  const Expr right = Expr::binary(Add, Expr::binary(Add, Expr::binary(Pow, x(), num("5")), Expr::binary(Pow, x(), num("2"))),
                                  num("100"));
  const Expr expected = Expr::binary(Mul, left, right);
  CHECK(parse_expression("(x*sin(x) - 2*sin(x/sqrt(2))^2) * (x^5 + x^2 + 100)") == expected);
  CHECK(parse_expression(corpus_entry("f1").expression) == expected);
}

TEST_CASE("parse errors carry the byte offset") {
  try {
    (void)parse_expression("sin(");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.offset() == 4);
  }
  try {
    (void)parse_expression("x + * 2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK(parse_error_code("") == ErrorCode::ParseError);
  CHECK(parse_error_code("x)") == ErrorCode::ParseError);
  CHECK(parse_error_code("tan(x)") == ErrorCode::ParseError);
  CHECK(parse_error_code("y + 1") == ErrorCode::ParseError);
}

TEST_CASE("x-dependent bases need integer exponents") {
  CHECK(parse_error_code("x^0.5") == ErrorCode::NonIntegerExponent);
  CHECK(parse_error_code("sin(x)^x") == ErrorCode::NonIntegerExponent);
  CHECK(parse_error_code("(x+1)^(1/2)") == ErrorCode::NonIntegerExponent);
  CHECK_NOTHROW((void)parse_expression("x^-2"));
  CHECK_NOTHROW((void)parse_expression("2^0.5 * x"));
  CHECK_NOTHROW((void)parse_expression("2^x"));
}

TEST_CASE("precedence and associativity") {
  CHECK(to_string(parse_expression("-x^2")) == "(-(x^2))");
  CHECK(to_string(parse_expression("2^3^2")) == "(2^(3^2))");
  CHECK(to_string(parse_expression("1 - 2 - 3")) == "((1 - 2) - 3)");
  CHECK(to_string(parse_expression("8 / 4 / 2")) == "((8 / 4) / 2)");
  CHECK(to_string(parse_expression("2*pi*i")) == "((2 * pi) * i)");
  CHECK(to_string(parse_expression("1e-3*x")) == "(1e-3 * x)");
}

TEST_CASE("canonical text re-parses to the same tree") {
  const char* samples[] = {
      "x^2 - 1",
      "-x^2 + 3*x - -2",
      "(exp(x^2 + 4*x + 5) - 1)^3 * sin(x + 2 - i)^2",
      "log(x) / sqrt(x + 1) - cos(pi*x)^-2",
      "2^0.5 * x - 3^x",
      "(x - sin(x))^4",
  };
  for (const char* s : samples) {
    const Expr e = parse_expression(s);
    CHECK(parse_expression(to_string(e)) == e);
  }
  for (const auto& entry : corpus()) {
    const Expr e = parse_expression(entry.expression);
    CHECK(parse_expression(to_string(e)) == e);
  }
}

TEST_CASE("jet of x^2 at 3") {
  const auto ctx = EvalContext::make(256);
  const Jet j = jet_eval(parse_expression("x^2"), Scalar(ctx, 3), 2);
  REQUIRE(j.order() == 2);
  CHECK(j[0] == Scalar(ctx, 9));
  CHECK(j[1] == Scalar(ctx, 6));
  CHECK(j[2] == Scalar(ctx, 1));
}

TEST_CASE("jet of exp at 0") {
  const auto ctx = EvalContext::make(256);
  const Jet j = jet_eval(parse_expression("exp(x)"), Scalar(ctx, 0), 2);
  CHECK(j[0] == Scalar(ctx, 1));
  CHECK(j[1] == Scalar(ctx, 1));
  CHECK(j[2] == S(ctx, "0.5"));
}

TEST_CASE("jet lifting") {
  const auto ctx = EvalContext::make(128);
  const Jet c = Jet::constant(Scalar(ctx, 5), 3);
  const Jet v = Jet::variable(Scalar(ctx, 2), 3);
  CHECK(c[0] == Scalar(ctx, 5));
  CHECK(v[1] == Scalar(ctx, 1));
  for (std::size_t k = 1; k <= 3; ++k) CHECK(c[k] == Scalar(ctx, 0));
  for (std::size_t k = 2; k <= 3; ++k) CHECK(v[k] == Scalar(ctx, 0));
  CHECK(v.derivative(1) == Scalar(ctx, 1));
}

TEST_CASE("jet rules on closed forms") {
  const auto ctx = EvalContext::make(256);
  const Scalar at = S(ctx, "0.3+0.2i");
  // 1/(1-x) has c_k = 1/(1-x)^(k+1).
  const Jet inv = jet_eval(parse_expression("1/(1-x)"), at, 6);
  for (int k = 0; k <= 6; ++k) {
    CHECK(testing::close(inv[k], pow(Scalar(ctx, 1) - at, -(k + 1)), 1e-70));
  }
  // sqrt(x)^2 = x and exp(log(x)) = x.
  const Jet sq = jet_eval(parse_expression("sqrt(x)*sqrt(x) - exp(log(x))"), at, 5);
  for (int k = 0; k <= 5; ++k) CHECK(modulus(sq[k]) < Real::parse("1e-70", 256));
  // sin^2 + cos^2 = 1.
  const Jet one = jet_eval(parse_expression("sin(x)^2 + cos(x)^2"), at, 8);
  CHECK(testing::close(one[0], Scalar(ctx, 1), 1e-70));
  for (int k = 1; k <= 8; ++k) CHECK(modulus(one[k]) < Real::parse("1e-70", 256));
  // 2^x = exp(x log 2).
  const Jet b = jet_eval(parse_expression("2^x"), at, 4);
  const Scalar l2 = log(Scalar(ctx, 2));
  Scalar fact(ctx, 1);
  for (int k = 0; k <= 4; ++k) {
    if (k > 0) fact = fact.scaled(k);
    CHECK(testing::close(b[k], exp(at * l2) * pow(l2, k) / fact, 1e-70));
  }
}

TEST_CASE("jet evaluation errors name the failing subtree") {
  const auto ctx = EvalContext::make(128);
  try {
    (void)jet_eval(parse_expression("1 + 1/(x-2)"), Scalar(ctx, 2), 2);
    FAIL("expected EvaluationError");
  } catch (const EvaluationError& e) {
    CHECK(e.cause() == ErrorCode::DivisionByZero);
    CHECK(e.subtree() == "(1 / (x - 2))");
  }
  try {
    (void)jet_eval(parse_expression("log(x)"), Scalar(ctx, 0), 1);
    FAIL("expected EvaluationError");
  } catch (const EvaluationError& e) {
    CHECK(e.cause() == ErrorCode::DomainError);
  }
  CHECK_THROWS_AS((void)jet_eval(parse_expression("x"), Scalar(ctx, 0), Jet::kMaxOrder + 1), Error);
}

TEST_CASE("corpus derivatives agree with the symbolic oracle") {
  const auto ctx = EvalContext::make(256);
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> radius(0.0, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  const Real tol = Real::parse("1e-30", 256);
  for (const char* name : {"f1", "f2", "f3", "f4"}) {
    const auto& entry = corpus_entry(name);
    const Expr e = parse_expression(entry.expression);
    const Scalar center = S(ctx, entry.x0);
    for (int n = 0; n < 25; ++n) {
      const double r = radius(rng);
      const double t = angle(rng);
      const Scalar at = center + Scalar(ctx, Real::from_double(r * std::cos(t), 256),
                                        Real::from_double(r * std::sin(t), 256));
      const Jet j = jet_eval(e, at, 4);
      const auto ref = oracle::corpus_derivatives(name, at);
      for (int k = 0; k <= 4; ++k) {
        INFO(name << " k=" << k << " at " << to_decimal_string(at, 8));
        CHECK(testing::relative_error(j.derivative(k), ref[static_cast<std::size_t>(k)]) <= tol);
      }
    }
  }
}
