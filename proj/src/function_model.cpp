#include "rootfam/function_model.hpp"

namespace rootfam {

FunctionModel FunctionModel::from_text(std::string_view text, std::string label) {
  FunctionModel model{parse_expression(text), std::nullopt, std::nullopt, std::move(label)};
  if (model.label.empty()) model.label = std::string(text);
  return model;
}

LocalData local_data(const Jet& jet, const Scalar& x, int need_order, std::optional<int> multiplicity) {
  if (need_order < 2 || need_order > 4) {
    throw Error(ErrorCode::ValidationError, "need_order must be 2, 3 or 4");
  }
  if (jet.order() < need_order) throw Error(ErrorCode::ValidationError, "jet order too low for need_order");
  const Scalar& f = jet[0];
  const Scalar& fp = jet[1];
  if (fp.is_zero()) {
    throw Error(ErrorCode::SingularDerivative, "f'(x) vanishes at x = " + to_decimal_string(x, 20));
  }
  LocalData ld{x, f, f / fp, jet[2] / fp, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  if (need_order >= 3) ld.a3 = jet[3] / fp;
  if (need_order >= 4) ld.a4 = jet[4] / fp;

  if (multiplicity) {
    const long m = *multiplicity;
    if (m < 1) throw Error(ErrorCode::ValidationError, "multiplicity must be at least 1");
    if (m == 1) {
      ld.v = ld.u;
      ld.d2 = ld.a2;
    } else {
      if (f.is_zero()) {
        throw Error(ErrorCode::ZeroResidual, "f(x) vanishes; d2 is undefined at x = " + to_decimal_string(x, 20));
      }
      ld.v = ld.u.scaled(m);
      // f'' = 2 c2
      const Scalar num = (fp * fp).scaled(1 - m) + (f * jet[2]).scaled(2 * m);
      const Scalar den = (f * fp).scaled(2 * m);
      ld.d2 = num / den;
    }
  }
  return ld;
}

LocalData local_data(const FunctionModel& model, const Scalar& x, int need_order) {
  return local_data(jet_eval(model.expr, x, need_order), x, need_order, model.known_multiplicity);
}

ZeroStructure check_zero_structure(const Jet& jet, int multiplicity) {
  ZeroStructure out;
  if (multiplicity < 1 || jet.order() < multiplicity) {
    out.reason = "jet order " + std::to_string(jet.order()) + " cannot resolve multiplicity " +
                 std::to_string(multiplicity);
    return out;
  }
  const Real cm = modulus(jet[static_cast<std::size_t>(multiplicity)]);
  if (cm.is_zero()) {
    out.reason = "coefficient c_" + std::to_string(multiplicity) + " vanishes";
    return out;
  }
  const long prec = jet[0].precision();
  const Real threshold = cm * Real::pow2(-prec / 2, prec);
  for (int k = 0; k < multiplicity; ++k) {
    if (modulus(jet[static_cast<std::size_t>(k)]) > threshold) {
      out.offending_index = k;
      out.reason = "coefficient c_" + std::to_string(k) + " = " +
                   to_decimal_string(jet[static_cast<std::size_t>(k)], 6) + " does not vanish";
      return out;
    }
  }
  out.consistent = true;
  return out;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"f1", "(x*sin(x) - 2*sin(x/sqrt(2))^2) * (x^5 + x^2 + 100)", 6, "-1.2", "0", false},
      {"f2", "(x*exp(x^2) - sin(x)^2 + 3*cos(x) + 5)^2", 2, "-1", "-1.2076478271309", true},
      {"f3", "(exp(x^2 + 4*x + 5) - 1)^3 * sin(x + 2 - i)^2", 5, "-1.7+0.8i", "-2+i", false},
      {"f4", "(x - sin(x))^4", 12, "0.4", "0", false},
      {"g2", "x*exp(x^2) - sin(x)^2 + 3*cos(x) + 5", 1, "-1", "-1.2076478271309", true},
  };
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e;
  }
  throw Error(ErrorCode::ValidationError, "unknown built-in function '" + std::string(name) + "'");
}

FunctionModel builtin_model(std::string_view name, const EvalContext& ctx) {
  const CorpusEntry& e = corpus_entry(name);
  return FunctionModel{parse_expression(e.expression), Scalar::parse(ctx, e.alpha), e.multiplicity, e.name};
}

}  // namespace rootfam
