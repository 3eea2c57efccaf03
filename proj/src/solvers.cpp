#include "rootfam/solvers.hpp"

#include <cmath>

namespace rootfam {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

const Scalar& require(const std::optional<Scalar>& value, const char* name) {
  if (!value) throw Error(ErrorCode::ValidationError, std::string("local data lacks ") + name);
  return *value;
}

// num / den, refusing denominators that cancel below 2^(-prec/2) of their
// scale, where prec is the caller's working precision.
Scalar guarded_quotient(const Scalar& num, const Scalar& den, const Real& den_scale, long prec, const char* what) {
  if (modulus(den) <= den_scale * Real::pow2(-prec / 2, den.precision())) {
    throw Error(ErrorCode::DegenerateStep,
                std::string(what) + " denominator " + to_decimal_string(den, 6) + " cancels");
  }
  return num / den;
}

// Step formulas run with the context's guard bits and are rounded once.
struct Widened {
  EvalContext narrow;
  EvalContext wide;
  LocalData ld;

  explicit Widened(const LocalData& in)
      : narrow(in.x.context()),
        wide(EvalContext::make(narrow.working_bits(), narrow.guard_bits)),
        ld(rebind_all(in, wide)) {}

  Scalar operator()(const Scalar& v) const { return v.rebind(wide); }
  Scalar finish(const Scalar& v) const { return v.rebind(narrow); }
  long prec() const noexcept { return narrow.precision_bits; }

  static std::optional<Scalar> rebind_opt(const std::optional<Scalar>& v, const EvalContext& ctx) {
    return v ? std::optional<Scalar>(v->rebind(ctx)) : std::nullopt;
  }
  static LocalData rebind_all(const LocalData& in, const EvalContext& ctx) {
    return LocalData{in.x.rebind(ctx),        in.f.rebind(ctx),         in.u.rebind(ctx),
                     in.a2.rebind(ctx),       rebind_opt(in.a3, ctx),   rebind_opt(in.a4, ctx),
                     rebind_opt(in.v, ctx),   rebind_opt(in.d2, ctx)};
  }
};

}  // namespace

void validate(const MethodSpec& spec) {
  std::visit(overloaded{
                 [](const method::FamilyMultiple& s) {
                   if (s.m < 1) throw Error(ErrorCode::ValidationError, "multiplicity must be >= 1");
                 },
                 [](const method::HalleyMultiple& s) {
                   if (s.m < 1) throw Error(ErrorCode::ValidationError, "multiplicity must be >= 1");
                 },
                 [](const method::BasicSequence& s) {
                   if (s.k < 3 || s.k > 5) throw Error(ErrorCode::ValidationError, "k must be 3, 4 or 5");
                 },
                 [](const auto&) {},
             },
             spec);
}

int required_order(const MethodSpec& spec) {
  return std::visit(overloaded{
                        [](const method::BasicSequence& s) { return s.k - 1; },
                        [](const method::FourthOrder&) { return 3; },
                        [](const auto&) { return 2; },
                    },
                    spec);
}

std::string describe(const MethodSpec& spec) {
  return std::visit(
      overloaded{
          [](const method::FamilySimple& s) { return "family(p=" + to_decimal_string(s.p, 6) + ")"; },
          [](const method::FamilyMultiple& s) {
            return "family-multiple(p=" + to_decimal_string(s.p, 6) + ", m=" + std::to_string(s.m) + ")";
          },
          [](const method::Newton&) { return std::string("newton"); },
          [](const method::Chebyshev&) { return std::string("chebyshev"); },
          [](const method::Halley&) { return std::string("halley"); },
          [](const method::HalleyMultiple& s) { return "halley-multiple(m=" + std::to_string(s.m) + ")"; },
          [](const method::BasicSequence& s) { return "basic-sequence(E" + std::to_string(s.k) + ")"; },
          [](const method::FourthOrder&) { return std::string("fourth-order"); },
      },
      spec);
}

SolverConfig SolverConfig::fixed(int steps) {
  SolverConfig cfg;
  cfg.max_iters = steps;
  cfg.fixed_iterations = steps;
  return cfg;
}

void SolverConfig::validate() const {
  if (max_iters < 1) throw Error(ErrorCode::ValidationError, "max_iters must be >= 1");
  if (tol_residual && tol_residual->sign() <= 0) throw Error(ErrorCode::ValidationError, "tol_residual must be > 0");
  if (tol_step && tol_step->sign() <= 0) throw Error(ErrorCode::ValidationError, "tol_step must be > 0");
  if (fixed_iterations && (*fixed_iterations < 1 || *fixed_iterations > max_iters)) {
    throw Error(ErrorCode::ValidationError, "fixed_iterations must lie in [1, max_iters]");
  }
}

Real default_tolerance(const EvalContext& ctx) {
  const long digits = static_cast<long>(std::floor(0.3 * 0.9 * static_cast<double>(ctx.precision_bits)));
  return pow(Real(10, ctx.precision_bits), -digits);
}

std::string_view to_string(TraceStatus status) noexcept {
  switch (status) {
    case TraceStatus::Converged: return "Converged";
    case TraceStatus::MaxIterations: return "MaxIterations";
    case TraceStatus::FixedComplete: return "FixedComplete";
    case TraceStatus::Failed: return "Failed";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Steps

Scalar step_family_simple(const LocalData& in, const Scalar& p_in) {
  const Widened w(in);
  const LocalData& ld = w.ld;
  const Scalar p = w(p_in);
  const Scalar one(w.wide, 1);
  const Scalar t = (p - ld.a2) * ld.u;
  const Scalar num = ld.u * (one + p * ld.u);
  const Scalar den = one + t;
  return w.finish(ld.x - guarded_quotient(num, den, Real(1, w.wide.precision_bits) + modulus(t), w.prec(), "family step"));
}

Scalar step_family_multiple(const LocalData& in, const Scalar& p_in, int m) {
  if (m < 1) throw Error(ErrorCode::ValidationError, "multiplicity must be >= 1");
  const Widened w(in);
  const LocalData& ld = w.ld;
  const Scalar p = w(p_in);
  const Scalar mu = ld.u.scaled(m);
  const Scalar t = ((p - ld.a2) * ld.u).scaled(2L * m);
  const Scalar num = ld.u.scaled(2L * m) * (Scalar(w.wide, 1) + p * mu);
  const Scalar den = Scalar(w.wide, 1L + m) + t;
  return w.finish(ld.x - guarded_quotient(num, den, Real(1L + m, w.wide.precision_bits) + modulus(t), w.prec(),
                                          "multiple family step"));
}

Scalar step_reference(const LocalData& in, ReferenceMethod kind, int m) {
  const Widened w(in);
  const LocalData& ld = w.ld;
  const Scalar one(w.wide, 1);
  const Scalar a2u = ld.a2 * ld.u;
  switch (kind) {
    case ReferenceMethod::Newton: return w.finish(ld.x - ld.u);
    case ReferenceMethod::Chebyshev: return w.finish(ld.x - ld.u * (one + a2u));
    case ReferenceMethod::Halley:
      return w.finish(ld.x - guarded_quotient(ld.u, one - a2u, Real(1, w.wide.precision_bits) + modulus(a2u), w.prec(),
                                              "Halley step"));
    case ReferenceMethod::HalleyMultiple: {
      if (m < 1) throw Error(ErrorCode::ValidationError, "multiplicity must be >= 1");
      const Scalar lead = Scalar(w.wide, 1L + m) / Scalar(w.wide, 2L * m);
      return w.finish(
          ld.x - guarded_quotient(ld.u, lead - a2u, modulus(lead) + modulus(a2u), w.prec(), "Halley-multiple step"));
    }
  }
  throw Error(ErrorCode::ValidationError, "unknown reference method");
}

Scalar step_basic_sequence(const LocalData& in, int k) {
  if (k < 3 || k > 5) throw Error(ErrorCode::ValidationError, "basic sequence index must be 3, 4 or 5");
  if (k >= 4) require(in.a3, "A3");
  if (k == 5) require(in.a4, "A4");
  const Widened w(in);
  const LocalData& ld = w.ld;
  const Scalar& u = ld.u;
  const Scalar& a2 = ld.a2;
  const Scalar u2 = u * u;
  Scalar e = ld.x - u - a2 * u2;
  if (k == 3) return w.finish(e);
  const Scalar& a3 = *ld.a3;
  const Scalar u3 = u2 * u;
  e -= ((a2 * a2).scaled(2) - a3) * u3;
  if (k == 4) return w.finish(e);
  const Scalar& a4 = *ld.a4;
  e -= ((a2 * a2 * a2).scaled(5) - (a2 * a3).scaled(5) + a4) * (u3 * u);
  return w.finish(e);
}

Scalar step_fourth_order(const LocalData& in) {
  require(in.a3, "A3");
  if (in.a2.is_zero()) throw Error(ErrorCode::UndefinedParameter, "A2 vanishes; the fourth-order parameter is undefined");
  const Widened w(in);
  const LocalData& ld = w.ld;
  const Scalar a2sq = ld.a2 * ld.a2;
  const Scalar t = (*ld.a3 - a2sq.scaled(2)) * ld.u;
  const Scalar den = ld.a2 + t;
  const Scalar ratio = guarded_quotient(a2sq * ld.u, den, modulus(ld.a2) + modulus(t), w.prec(), "fourth-order step");
  return w.finish(ld.x - ld.u * (Scalar(w.wide, 1) + ratio));
}

Scalar step(const LocalData& ld, const MethodSpec& spec) {
  return std::visit(
      overloaded{
          [&](const method::FamilySimple& s) { return step_family_simple(ld, s.p); },
          [&](const method::FamilyMultiple& s) { return step_family_multiple(ld, s.p, s.m); },
          [&](const method::Newton&) { return step_reference(ld, ReferenceMethod::Newton); },
          [&](const method::Chebyshev&) { return step_reference(ld, ReferenceMethod::Chebyshev); },
          [&](const method::Halley&) { return step_reference(ld, ReferenceMethod::Halley); },
          [&](const method::HalleyMultiple& s) { return step_reference(ld, ReferenceMethod::HalleyMultiple, s.m); },
          [&](const method::BasicSequence& s) { return step_basic_sequence(ld, s.k); },
          [&](const method::FourthOrder&) { return step_fourth_order(ld); },
      },
      spec);
}

// ---------------------------------------------------------------------------
// Driver

Trace iterate(const FunctionModel& model, const MethodSpec& spec, const Scalar& x0, const SolverConfig& cfg) {
  validate(spec);
  cfg.validate();
  const EvalContext& ctx = x0.context();
  const int order = required_order(spec);
  const bool fixed = cfg.fixed_iterations.has_value();
  const int limit = fixed ? *cfg.fixed_iterations : cfg.max_iters;
  const Real tol_residual = cfg.tol_residual.value_or(default_tolerance(ctx));
  const Real tol_step = cfg.tol_step.value_or(default_tolerance(ctx));
  std::optional<Scalar> alpha;
  if (model.known_zero) alpha = model.known_zero->rebind(ctx);

  Trace trace;
  if (alpha) trace.errors.emplace();
  auto fail = [&trace](const Error& e) {
    trace.status = TraceStatus::Failed;
    trace.failure_code = e.code();
    trace.failure_reason = e.what();
  };

  std::optional<Jet> jet;
  auto record = [&](const Scalar& x) {
    trace.iterates.push_back(x);
    jet = jet_eval(model.expr, x, order);
    trace.residuals.push_back(modulus((*jet)[0]));
    if (alpha) trace.errors->push_back(modulus(x - *alpha));
  };

  try {
    record(x0);
  } catch (const Error& e) {
    fail(e);
    return trace;
  }

  for (int k = 0;; ++k) {
    const Real& residual = trace.residuals.back();
    if (residual.is_zero() || (!fixed && residual <= tol_residual)) {
      trace.status = TraceStatus::Converged;
      break;
    }
    if (k == limit) {
      trace.status = fixed ? TraceStatus::FixedComplete : TraceStatus::MaxIterations;
      break;
    }
    const Scalar x = trace.iterates.back();
    try {
      const LocalData ld = local_data(*jet, x, order, model.known_multiplicity);
      record(step(ld, spec));
    } catch (const Error& e) {
      fail(e);
      break;
    }
    if (!fixed && modulus(trace.iterates.back() - x) <= tol_step) {
      trace.status = TraceStatus::Converged;
      break;
    }
  }
  return trace;
}

}  // namespace rootfam
