/**
 * @file solvers.hpp
 * @brief Single-step iteration functions and the iteration driver.
 *
 * With u = f/f' and A_k = f^(k)/(k! f') evaluated at the current point x:
 *
 *   family (simple zeros)    x - u (1 + p u) / (1 + (p - A2) u)
 *   family (multiplicity m)  x - 2 m u (1 + m p u) / (1 + m + 2 m (p - A2) u)
 *   Newton                   x - u
 *   Chebyshev                x - u (1 + A2 u)
 *   Halley                   x - u / (1 - A2 u)
 *   Halley, multiplicity m   x - u / ((m + 1)/(2m) - A2 u)
 *   basic sequence E3..E5    x - u - A2 u^2 - (2A2^2 - A3) u^3 - (5A2^3 - 5A2A3 + A4) u^4
 *   fourth order             x - u (1 + A2^2 u / (A2 + (A3 - 2 A2^2) u))
 *
 * A step whose denominator cancels below 2^(-precision/2) of the magnitude of
 * its terms raises DegenerateStep; there is no damping or fallback.
 */
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rootfam/function_model.hpp"

namespace rootfam {

namespace method {
struct FamilySimple {
  Scalar p;
};
struct FamilyMultiple {
  Scalar p;
  int m;
};
struct Newton {};
struct Chebyshev {};
struct Halley {};
struct HalleyMultiple {
  int m;
};
struct BasicSequence {
  int k;
};
struct FourthOrder {};
}  // namespace method

using MethodSpec =
    std::variant<method::FamilySimple, method::FamilyMultiple, method::Newton, method::Chebyshev,
                 method::Halley, method::HalleyMultiple, method::BasicSequence, method::FourthOrder>;

/// Throws ValidationError when m < 1 or k is not 3, 4 or 5.
void validate(const MethodSpec& spec);
/// Highest A_k the method reads (2, 3 or 4).
int required_order(const MethodSpec& spec);
std::string describe(const MethodSpec& spec);

struct SolverConfig {
  int max_iters = 100;
  /// Stop when |f(x_k)| <= tol_residual. Unset means 10^-(0.27 precision_bits).
  std::optional<Real> tol_residual;
  /// Stop when |x_{k+1} - x_k| <= tol_step. Same default.
  std::optional<Real> tol_step;
  /// Run exactly this many steps with no tolerance test.
  std::optional<int> fixed_iterations;

  static SolverConfig fixed(int steps);
  void validate() const;
};

/// 10^-(floor(0.3 * 0.9 * precision_bits)), the library's default tolerance.
Real default_tolerance(const EvalContext& ctx);

enum class TraceStatus { Converged, MaxIterations, FixedComplete, Failed };
std::string_view to_string(TraceStatus status) noexcept;

struct Trace {
  std::vector<Scalar> iterates;
  std::vector<Real> residuals;
  /// |x_k - alpha| for every iterate when the model has a known zero.
  std::optional<std::vector<Real>> errors;
  TraceStatus status = TraceStatus::Failed;
  std::optional<ErrorCode> failure_code;
  std::string failure_reason;

  std::size_t steps() const noexcept { return iterates.empty() ? 0 : iterates.size() - 1; }
};

Scalar step_family_simple(const LocalData& ld, const Scalar& p);
Scalar step_family_multiple(const LocalData& ld, const Scalar& p, int m);

enum class ReferenceMethod { Newton, Chebyshev, Halley, HalleyMultiple };
/// `m` is read only by HalleyMultiple.
Scalar step_reference(const LocalData& ld, ReferenceMethod kind, int m = 1);

/// k in {3, 4, 5}; needs A_{k-1} in `ld`.
Scalar step_basic_sequence(const LocalData& ld, int k);

/// Needs A3. Throws UndefinedParameter when A2 = 0.
Scalar step_fourth_order(const LocalData& ld);

Scalar step(const LocalData& ld, const MethodSpec& spec);

Trace iterate(const FunctionModel& model, const MethodSpec& spec, const Scalar& x0,
              const SolverConfig& cfg);

}  // namespace rootfam
