#include <random>

#include "doctest.h"
#include "oracle/g2_zero.hpp"
#include "rootfam/analysis.hpp"
#include "rootfam/bench.hpp"
#include "support.hpp"

using namespace rootfam;
using testing::S;

namespace {

Real R(const char* text) { return Real::parse(text, 512); }

std::vector<Real> reals(std::initializer_list<const char*> texts) {
  std::vector<Real> out;
  for (const char* t : texts) out.push_back(R(t));
  return out;
}

ErrorCode error_code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ValidationError;
}

double relative_gap(const Real& a, const Real& b) { return (abs(a - b) / b).to_double(); }

}  // namespace

TEST_CASE("computational order of convergence") {
  CHECK(format_fixed(coc(R("1e-2"), R("1e-6"), R("1e-18")), 3) == "3.000");
  CHECK(format_fixed(coc(R("1e-1"), R("1e-3"), R("1e-7")), 3) == "2.000");
  const auto seq = reals({"5", "1e-2", "1e-6", "1e-18"});
  CHECK(format_fixed(coc(std::span<const Real>(seq)), 3) == "3.000");
}

TEST_CASE("undefined order of convergence") {
  CHECK(error_code_of([] { (void)coc(R("1e-2"), R("0"), R("0")); }) == ErrorCode::UndefinedCOC);
  CHECK(error_code_of([] { (void)coc(R("1e-2"), R("1e-1"), R("1e-3")); }) == ErrorCode::UndefinedCOC);
  CHECK(error_code_of([] { (void)coc(R("1e-2"), R("1e-2"), R("1e-3")); }) == ErrorCode::UndefinedCOC);
  const auto two = reals({"1", "0.5"});
  CHECK(error_code_of([&] { (void)coc(std::span<const Real>(two)); }) == ErrorCode::UndefinedCOC);
}

TEST_CASE("order of convergence of f1 at p = -2") {
  BenchmarkCase c = BenchmarkCase::builtin("f1");
  c.p_values = {"-2"};
  const Report r = run_case(c);
  REQUIRE(r.cases.front().runs.front().coc);
  CHECK(format_fixed(*r.cases.front().runs.front().coc, 3) == "3.011");
}

TEST_CASE("predicted constant at a simple zero") {
  const auto ctx = EvalContext::make(512);
  const auto model = FunctionModel::from_text("x^2 - 1");
  const AecPrediction a = predicted_aec_simple(model, Scalar(ctx, 1), Scalar(ctx, 0));
  CHECK(a.value == R("0.25"));
  REQUIRE(a.ingredients.size() == 2);
  CHECK(a.ingredients[0] == S(ctx, "0.5"));
  CHECK(predicted_aec_simple(model, Scalar(ctx, 1), S(ctx, "-0.5")).value.is_zero());
  CHECK(error_code_of([&] { (void)predicted_aec_simple(model, Scalar(ctx, 2), Scalar(ctx, 0)); }) ==
        ErrorCode::NotASimpleZero);
  CHECK(error_code_of([&] {
          (void)predicted_aec_simple(FunctionModel::from_text("(x-1)^2"), Scalar(ctx, 1), Scalar(ctx, 0));
        }) == ErrorCode::NotASimpleZero);
}

TEST_CASE("predicted constant at a double zero") {
  const auto ctx = EvalContext::make(512);
  const auto model = FunctionModel::from_text("(x-1)^2*(x+1)");
  CHECK(predicted_aec_multiple(model, Scalar(ctx, 1), Scalar(ctx, 0), 2).value == R("0.09375"));
  CHECK(predicted_aec_multiple(model, Scalar(ctx, 1), S(ctx, "-0.375"), 2).value.is_zero());
  CHECK(error_code_of([&] { (void)predicted_aec_multiple(model, Scalar(ctx, 1), Scalar(ctx, 0), 3); }) ==
        ErrorCode::MultiplicityMismatch);
  CHECK(error_code_of([&] { (void)predicted_aec_multiple(model, Scalar(ctx, 1), Scalar(ctx, 0), 1); }) ==
        ErrorCode::MultiplicityMismatch);
}

TEST_CASE("empirical constant on g2 matches the prediction") {
  const auto ctx = EvalContext::make(4096);
  FunctionModel g2 = builtin_model("g2", ctx);
  g2.known_zero = oracle::g2_zero(ctx);
  const Scalar p(ctx, 1);
  const Trace t = iterate(g2, method::FamilySimple{p}, Scalar(ctx, -1), SolverConfig::fixed(5));
  const OrderEstimate est = empirical_order_and_aec(t);
  CHECK(est.rounded_order == 3);
  const AecPrediction pred = predicted_aec_simple(g2, *g2.known_zero, p);
  CHECK(relative_gap(est.aec_estimate, pred.value) < 0.01);
}

TEST_CASE("empirical constant on f1 matches the prediction") {
  const auto ctx = EvalContext::make(4096);
  const FunctionModel f1 = builtin_model("f1", ctx);
  const Scalar p(ctx, -1);
  const Trace t = iterate(f1, method::FamilyMultiple{p, 6}, S(ctx, "-1.2"), SolverConfig::fixed(4));
  const OrderEstimate est = empirical_order_and_aec(t);
  const AecPrediction pred = predicted_aec_multiple(f1, Scalar(ctx, 0), p, 6);
  CHECK(relative_gap(est.aec_estimate, pred.value) < 0.02);
}

TEST_CASE("order slope from error sequences") {
  const auto e = reals({"1e-2", "1e-6", "1e-18"});
  const OrderEstimate est = empirical_order_and_aec(std::span<const Real>(e));
  CHECK(est.order_slope == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(est.rounded_order == 3);
  CHECK(est.aec_estimate.to_double() == doctest::Approx(1.0).epsilon(1e-12));

  const auto short_run = reals({"1e-2", "1e-6", "1e-5"});
  CHECK(error_code_of([&] { (void)empirical_order_and_aec(std::span<const Real>(short_run)); }) ==
        ErrorCode::InsufficientData);
  CHECK(error_code_of([] { (void)empirical_order_and_aec(Trace{}); }) == ErrorCode::InsufficientData);
}

TEST_CASE("Newton on a quadratic has order two and constant one half") {
  const auto ctx = EvalContext::make(512);
  auto model = FunctionModel::from_text("x^2 - 1");
  model.known_zero = Scalar(ctx, 1);
  const Trace t = iterate(model, method::Newton{}, Scalar(ctx, 2), SolverConfig::fixed(6));
  const OrderEstimate est = empirical_order_and_aec(t);
  CHECK(est.order_slope == doctest::Approx(2.0).epsilon(0.025));
  CHECK(est.aec_estimate.to_double() == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("order slope of the f4 run at p = 1") {
  BenchmarkCase c = BenchmarkCase::builtin("f4");
  c.p_values = {"1"};
  const Report r = run_case(c);
  const OrderEstimate est = empirical_order_and_aec(std::span<const Real>(r.cases.front().runs.front().errors));
  CHECK(est.order_slope >= 2.9);
  CHECK(est.order_slope <= 3.1);
}

TEST_CASE("a fourth iteration moves the order estimate toward three") {
  std::vector<BenchmarkCase> three = table2_cases();
  std::vector<BenchmarkCase> four = three;
  for (auto& c : four) c.iterations = 4;
  const Report r3 = run_cases(three);
  const Report r4 = run_cases(four);
  const Real target(3, 64);
  for (std::size_t ci = 0; ci < r3.cases.size(); ++ci) {
    for (std::size_t pi = 0; pi < r3.cases[ci].runs.size(); ++pi) {
      const auto& a = r3.cases[ci].runs[pi];
      const auto& b = r4.cases[ci].runs[pi];
      REQUIRE(a.coc);
      REQUIRE(b.coc);
      const double before = abs(*a.coc - target).to_double();
      const double after = abs(*b.coc - target).to_double();
      INFO(r3.cases[ci].label << " p=" << a.p << ": " << before << " -> " << after);
      if (before > 0.005) CHECK(after < before);
    }
  }
}

TEST_CASE("predicted constants agree with runs on random cubics") {
  const auto ctx = EvalContext::make(4096);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> pdist(-2.0, 2.0);
  for (int n = 0; n < 10; ++n) {
    const Scalar a = testing::uniform_complex(rng, ctx, 1.0);
    const Scalar b = a + Scalar(ctx, 2) + testing::uniform_complex(rng, ctx, 0.5);
    const Scalar c = a - Scalar(ctx, 0, 2) + testing::uniform_complex(rng, ctx, 0.5);
    auto model = FunctionModel::from_text("(x - " + testing::literal(a) + ")*(x - " + testing::literal(b) + ")*(x - " +
                                          testing::literal(c) + ")");
    model.known_zero = a;
    const Scalar p(ctx, Real::from_double(pdist(rng), 4096));
    const Scalar x0 = a + testing::uniform_complex(rng, ctx, 0.1);
    const Trace t = iterate(model, method::FamilySimple{p}, x0, SolverConfig::fixed(5));
    const OrderEstimate est = empirical_order_and_aec(t);
    const AecPrediction pred = predicted_aec_simple(model, a, p);
    INFO("case " << n);
    CHECK(relative_gap(est.aec_estimate, pred.value) < 0.01);
  }
}

TEST_CASE("multiple-zero constant with m = 1 matches the simple form") {
  const auto ctx = EvalContext::make(512);
  std::mt19937_64 rng(42);
  for (int n = 0; n < 20; ++n) {
    const Scalar a = testing::uniform_complex(rng, ctx, 1.0);
    const Scalar b = testing::uniform_complex(rng, ctx, 2.0);
    const Scalar c = testing::uniform_complex(rng, ctx, 2.0);
    const auto model = FunctionModel::from_text("(x - " + testing::literal(a) + ")*(x - " + testing::literal(b) +
                                                ")*(x - " + testing::literal(c) + ")");
    const Scalar p = testing::uniform_complex(rng, ctx, 2.0);
    CHECK(ulp_distance(predicted_aec_multiple(model, a, p, 1).value, predicted_aec_simple(model, a, p).value) <= 4.0);
  }
}
