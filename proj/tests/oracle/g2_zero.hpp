// Real zero of g2(x) = x exp(x^2) - sin(x)^2 + 3 cos(x) + 5 near -1.2076,
// located by bisection and polished by Newton on the closed-form derivative.
// Uses no jet or solver code.
#pragma once

#include "oracle/corpus_derivatives.hpp"

namespace oracle {

inline rootfam::Scalar g2_zero(const rootfam::EvalContext& ctx) {
  using rootfam::Real;
  using rootfam::Scalar;
  const long bits = ctx.precision_bits;
  auto g = [&](const Real& t) { return g2_derivatives(Scalar(ctx, t))[0].re(); };
  Real lo = Real::parse("-1.5", bits);
  Real hi = Real::parse("-1", bits);
  const int lo_sign = g(lo).sign();
  for (int k = 0; k < 60; ++k) {
    Real mid = (lo + hi) * Real::pow2(-1, bits);
    if (g(mid).sign() == lo_sign) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Real t = lo;
  Real last_step(bits);
  for (int k = 0; k < 64; ++k) {
    const auto d = g2_derivatives(Scalar(ctx, t));
    const Real step = d[0].re() / d[1].re();
    if (step.is_zero() || (k > 0 && !(abs(step) < last_step))) break;
    last_step = abs(step);
    t = t - step;
  }
  return Scalar(ctx, t);
}

}  // namespace oracle
