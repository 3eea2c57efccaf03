/**
 * @file analysis.hpp
 * @brief Convergence analytics: computational order of convergence, predicted
 *        and empirical asymptotic error constants, fitted order slopes.
 */
#pragma once

#include <span>
#include <string>
#include <vector>

#include "rootfam/function_model.hpp"
#include "rootfam/solvers.hpp"

namespace rootfam {

/// r_c = log|f_{k+1}/f_k| / log|f_k/f_{k-1}| from three consecutive residuals.
/// Throws UndefinedCOC when a residual is zero or the sequence does not
/// strictly decrease.
Real coc(const Real& r_prev, const Real& r_cur, const Real& r_next);
/// COC from the last three entries of a residual sequence.
Real coc(std::span<const Real> residuals);

/// Fixed-point rendering with exactly `decimals` digits after the point.
std::string format_fixed(const Real& value, int decimals);

struct AecPrediction {
  Real value;
  /// A2, A3 at the zero (simple case) or B_m, B_{m+1}, B_{m+2} (multiple case).
  std::vector<Scalar> ingredients;
};

/// |A2(a)^2 - A3(a) + p A2(a)| at a simple zero a.
/// Throws NotASimpleZero when f(a) does not vanish or f'(a) does.
AecPrediction predicted_aec_simple(const FunctionModel& model, const Scalar& alpha, const Scalar& p);

/// |p B_{m+1}/(m B_m) - B_{m+2}/(m B_m) + (m+1) B_{m+1}^2 / (2 m^2 B_m^2)|
/// with B_r = f^(r)(a)/r!. Throws MultiplicityMismatch when the Taylor
/// coefficients at a contradict multiplicity m.
AecPrediction predicted_aec_multiple(const FunctionModel& model, const Scalar& alpha, const Scalar& p, int m);

struct OrderEstimate {
  /// Least-squares slope of log e_{k+1} against log e_k.
  double order_slope;
  /// e_n / e_{n-1}^q for the final pair, q = order_slope rounded to an integer.
  Real aec_estimate;
  int rounded_order;
};

/// Uses the leading run of strictly decreasing positive errors.
/// Throws InsufficientData when that run has fewer than three entries.
OrderEstimate empirical_order_and_aec(std::span<const Real> errors);
OrderEstimate empirical_order_and_aec(const Trace& trace);

}  // namespace rootfam
