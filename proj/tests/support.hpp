// Shared helpers for the unit tests.
#pragma once

#include <random>
#include <string>

#include "rootfam/numeric.hpp"

namespace testing {

using namespace rootfam;

inline Scalar S(const EvalContext& ctx, const std::string& text) { return Scalar::parse(ctx, text); }

/// |a - b| / |b|, or |a| when b is zero.
inline Real relative_error(const Scalar& a, const Scalar& b) {
  const Real diff = modulus(a - b);
  const Real scale = modulus(b);
  return scale.is_zero() ? diff : diff / scale;
}

inline bool close(const Scalar& a, const Scalar& b, double rel) {
  return relative_error(a, b) <= Real::from_double(rel, a.precision());
}

/// Real in [lo, hi] with 53 random bits, exactly representable.
inline Real uniform_real(std::mt19937_64& rng, double lo, double hi, long bits) {
  std::uniform_real_distribution<double> d(lo, hi);
  return Real::from_double(d(rng), bits);
}

inline Scalar uniform_complex(std::mt19937_64& rng, const EvalContext& ctx, double radius) {
  return Scalar(ctx, uniform_real(rng, -radius, radius, ctx.precision_bits),
                uniform_real(rng, -radius, radius, ctx.precision_bits));
}

/// Expression text for an exact complex constant, e.g. "(1.5e0 + (-2.0e-1)*i)".
inline std::string literal(const Scalar& v) {
  return "(" + v.re().to_exact_string() + " + (" + v.im().to_exact_string() + ")*i)";
}

/// Distance between two candidate next iterates in ulps of the largest of
/// |x|, |a| and |b|. A step x - c that cancels most of x loses the leading
/// bits of x, so the iterate scale is the meaningful unit.
inline double step_ulps(const Scalar& x, const Scalar& a, const Scalar& b) {
  const Real diff = modulus(a - b);
  if (diff.is_zero()) return 0.0;
  const Real scale = max(modulus(x), max(modulus(a), modulus(b)));
  return (diff / Real::pow2(scale.exponent() - x.precision(), x.precision())).to_double();
}

}  // namespace testing
