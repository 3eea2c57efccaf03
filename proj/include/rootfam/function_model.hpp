/**
 * @file function_model.hpp
 * @brief A function f(x) with optional known zero/multiplicity, the per-point
 *        quantities the step formulas consume, and the built-in test corpus.
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rootfam/expr.hpp"
#include "rootfam/jet.hpp"

namespace rootfam {

struct FunctionModel {
  Expr expr;
  std::optional<Scalar> known_zero;
  std::optional<int> known_multiplicity;
  std::string label;

  static FunctionModel from_text(std::string_view text, std::string label = {});
};

/// Quantities at a point x:
///   u = f/f',  A_k = f^(k) / (k! f'),
///   v = m u,   d2 = ((1-m) f'^2 + m f f'') / (2 m f f').
/// For m = 1, v = u and d2 = A2.
struct LocalData {
  Scalar x;
  Scalar f;
  Scalar u;
  Scalar a2;
  std::optional<Scalar> a3;
  std::optional<Scalar> a4;
  std::optional<Scalar> v;
  std::optional<Scalar> d2;
};

/// need_order in {2, 3, 4} selects which A_k are filled. v and d2 are filled
/// when the model carries a multiplicity. Throws SingularDerivative when
/// f'(x) = 0, and ZeroResidual when f(x) = 0 and d2 is required (m > 1).
LocalData local_data(const FunctionModel& model, const Scalar& x, int need_order);

/// Same, from an already computed jet of order >= need_order.
LocalData local_data(const Jet& jet, const Scalar& x, int need_order, std::optional<int> multiplicity);

/// Result of inspecting the Taylor coefficients of f at a candidate zero.
struct ZeroStructure {
  bool consistent = false;
  /// First index k < m with |c_k| above the noise threshold, or -1.
  int offending_index = -1;
  std::string reason;
};

/// Checks that c_0..c_{m-1} vanish to context precision relative to c_m and
/// that c_m is nonzero. The threshold is 2^(-precision/2) |c_m|.
ZeroStructure check_zero_structure(const Jet& jet_at_zero, int multiplicity);

/// One row of the built-in test corpus.
struct CorpusEntry {
  std::string name;
  std::string expression;
  int multiplicity;
  std::string x0;
  std::string alpha;
  /// The listed alpha is a truncated decimal and should be refined before use.
  bool refine_alpha = false;
};

/// f1..f4 plus g2 (the unsquared base of f2, a simple zero).
const std::vector<CorpusEntry>& corpus();
/// Throws ValidationError for an unknown name.
const CorpusEntry& corpus_entry(std::string_view name);
/// Model with expression, multiplicity and (listed) zero at ctx precision.
FunctionModel builtin_model(std::string_view name, const EvalContext& ctx);

}  // namespace rootfam
