#include "rootfam/analysis.hpp"

#include <cmath>

namespace rootfam {

Real coc(const Real& r_prev, const Real& r_cur, const Real& r_next) {
  if (r_prev.is_zero() || r_cur.is_zero() || r_next.is_zero()) {
    throw Error(ErrorCode::UndefinedCOC, "a residual is exactly zero");
  }
  if (r_prev.sign() < 0 || r_cur.sign() < 0 || r_next.sign() < 0) {
    throw Error(ErrorCode::UndefinedCOC, "residuals must be magnitudes");
  }
  if (!(r_cur < r_prev) || !(r_next < r_cur)) {
    throw Error(ErrorCode::UndefinedCOC, "residuals are not strictly decreasing");
  }
  return log(r_next / r_cur) / log(r_cur / r_prev);
}

Real coc(std::span<const Real> residuals) {
  if (residuals.size() < 3) throw Error(ErrorCode::UndefinedCOC, "need three residuals");
  const std::size_t n = residuals.size();
  return coc(residuals[n - 3], residuals[n - 2], residuals[n - 1]);
}

std::string format_fixed(const Real& value, int decimals) {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*Rf", decimals, value.get()) < 0) {
    throw Error(ErrorCode::ValidationError, "formatting failed");
  }
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

AecPrediction predicted_aec_simple(const FunctionModel& model, const Scalar& alpha, const Scalar& p) {
  const Jet jet = jet_eval(model.expr, alpha, 3);
  const ZeroStructure zs = check_zero_structure(jet, 1);
  if (!zs.consistent) throw Error(ErrorCode::NotASimpleZero, zs.reason);
  const EvalContext& ctx = alpha.context();
  const EvalContext wide = EvalContext::make(ctx.working_bits(), ctx.guard_bits);
  const Scalar c1 = jet[1].rebind(wide);
  const Scalar a2 = jet[2].rebind(wide) / c1;
  const Scalar a3 = jet[3].rebind(wide) / c1;
  const Scalar value = a2 * a2 - a3 + p.rebind(wide) * a2;
  return AecPrediction{modulus(value.rebind(ctx)), {a2.rebind(ctx), a3.rebind(ctx)}};
}

AecPrediction predicted_aec_multiple(const FunctionModel& model, const Scalar& alpha, const Scalar& p, int m) {
  if (m < 1) throw Error(ErrorCode::ValidationError, "multiplicity must be >= 1");
  if (m + 2 > Jet::kMaxOrder) throw Error(ErrorCode::ValidationError, "multiplicity too large for jet evaluation");
  const Jet jet = jet_eval(model.expr, alpha, m + 2);
  const ZeroStructure zs = check_zero_structure(jet, m);
  if (!zs.consistent) throw Error(ErrorCode::MultiplicityMismatch, zs.reason);
  const auto idx = static_cast<std::size_t>(m);
  const EvalContext& ctx = alpha.context();
  const EvalContext wide = EvalContext::make(ctx.working_bits(), ctx.guard_bits);
  const Scalar bm = jet[idx].rebind(wide);
  const Scalar bm1 = jet[idx + 1].rebind(wide);
  const Scalar bm2 = jet[idx + 2].rebind(wide);
  const Scalar mbm = bm.scaled(m);
  const Scalar value = p.rebind(wide) * bm1 / mbm - bm2 / mbm + (bm1 * bm1).scaled(m + 1) / (mbm * mbm).scaled(2);
  return AecPrediction{modulus(value.rebind(ctx)), {jet[idx], jet[idx + 1], jet[idx + 2]}};
}

OrderEstimate empirical_order_and_aec(std::span<const Real> errors) {
  std::size_t n = 0;
  while (n < errors.size() && errors[n].sign() > 0 && (n == 0 || errors[n] < errors[n - 1])) ++n;
  if (n < 3) {
    throw Error(ErrorCode::InsufficientData,
                "need at least three strictly decreasing positive errors, have " + std::to_string(n));
  }
  std::vector<double> logs;
  logs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) logs.push_back(log(errors[k]).to_double());

  // Ordinary least squares of y = log e_{k+1} on x = log e_k.
  const std::size_t pairs = n - 1;
  double mx = 0, my = 0;
  for (std::size_t k = 0; k < pairs; ++k) {
    mx += logs[k];
    my += logs[k + 1];
  }
  mx /= static_cast<double>(pairs);
  my /= static_cast<double>(pairs);
  double sxy = 0, sxx = 0;
  for (std::size_t k = 0; k < pairs; ++k) {
    sxy += (logs[k] - mx) * (logs[k + 1] - my);
    sxx += (logs[k] - mx) * (logs[k] - mx);
  }
  if (sxx == 0) throw Error(ErrorCode::InsufficientData, "errors do not vary");
  const double slope = sxy / sxx;
  const int q = static_cast<int>(std::lround(slope));
  const Real aec = errors[n - 1] / pow(errors[n - 2], q);
  return OrderEstimate{slope, aec, q};
}

OrderEstimate empirical_order_and_aec(const Trace& trace) {
  if (!trace.errors) throw Error(ErrorCode::InsufficientData, "trace has no known-zero errors");
  return empirical_order_and_aec(std::span<const Real>(*trace.errors));
}

}  // namespace rootfam
