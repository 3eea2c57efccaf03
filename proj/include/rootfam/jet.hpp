/**
 * @file jet.hpp
 * @brief Truncated Taylor series ("jets") and their propagation through Expr.
 *
 * A jet of order N at a point x holds c_0..c_N with c_k = f^(k)(x)/k!.
 * Arithmetic follows the usual recurrences: Cauchy products for
 * multiplication, series inversion for division, and the first-order ODE
 * recurrences for exp, log, sin/cos and sqrt.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rootfam/expr.hpp"
#include "rootfam/numeric.hpp"

namespace rootfam {

class Jet {
 public:
  /// Highest order accepted by jet_eval. The multiple-zero error constant needs
  /// order m + 2 at the zero, and the corpus goes up to m = 12.
  static constexpr int kMaxOrder = 16;

  static Jet constant(const Scalar& c, int order);
  /// The identity function expanded at x: (x, 1, 0, ...).
  static Jet variable(const Scalar& x, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<const Scalar> coeffs() const noexcept { return coeffs_; }
  /// f^(k)(x) = k! c_k.
  Scalar derivative(int k) const;

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a);

 private:
  explicit Jet(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}
  friend Jet jet_exp(const Jet&);
  friend Jet jet_log(const Jet&);
  friend Jet jet_sin(const Jet&);
  friend Jet jet_cos(const Jet&);
  friend Jet jet_sqrt(const Jet&);
  friend Jet jet_pow(const Jet&, long);

  std::vector<Scalar> coeffs_;
};

Jet jet_exp(const Jet& a);
Jet jet_log(const Jet& a);
Jet jet_sin(const Jet& a);
Jet jet_cos(const Jet& a);
Jet jet_sqrt(const Jet& a);
Jet jet_pow(const Jet& base, long exponent);

/// Taylor coefficients of `expr` at x up to `order` (0..Jet::kMaxOrder).
/// Failures are reported as EvaluationError naming the failing subtree.
Jet jet_eval(const Expr& expr, const Scalar& x, int order);

}  // namespace rootfam
