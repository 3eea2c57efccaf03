// rootfam: command-line front end for single solves, benchmark cases,
// parameter sweeps and the reference-table reproduction.
//
// Exit codes: 0 success, 1 validation error, 2 a run failed,
// 3 table mismatch in --verify mode.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rootfam/bench.hpp"

namespace {

using namespace rootfam;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRunFailed = 2;
constexpr int kExitMismatch = 3;

struct CaseFlags {
  std::string function;
  std::string label;
  std::optional<int> m;
  std::optional<std::string> x0;
  std::optional<std::string> alpha;
  std::vector<std::string> p;
  std::optional<int> iters;
  std::optional<long> precision;
};

struct OutputFlags {
  std::string format = "markdown";
  std::string out;
  bool timings = false;
  bool serial = false;
  int csv_digits = 0;
};

void add_case_flags(CLI::App* app, CaseFlags& f) {
  app->add_option("--function", f.function, "Expression in x or a built-in name (f1..f4, g2)");
  app->add_option("--label", f.label, "Label used in reports");
  app->add_option("--m", f.m, "Multiplicity of the sought zero");
  app->add_option("--x0", f.x0, "Initial approximation, e.g. -1.7+0.8i");
  app->add_option("--alpha", f.alpha, "Known zero, or 'refine'");
  app->add_option("--p", f.p, "Family parameter (repeatable)");
  app->add_option("--iters", f.iters, "Fixed number of iterations");
  app->add_option("--precision", f.precision, "Working precision in bits");
}

void add_output_flags(CLI::App* app, OutputFlags& f) {
  app->add_option("--format", f.format, "markdown | csv | json")->capture_default_str();
  app->add_option("--out", f.out, "Write the report to this file instead of stdout");
  app->add_flag("--timings", f.timings, "Include wall-clock timings in the report");
  app->add_flag("--serial", f.serial, "Run cases on one thread");
  app->add_option("--csv-digits", f.csv_digits, "Significant digits in csv output (0 = exact)");
}

bool is_builtin(const std::string& name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return true;
  }
  return false;
}

BenchmarkCase base_case(const std::string& function) {
  if (is_builtin(function)) return BenchmarkCase::builtin(function);
  BenchmarkCase c;
  c.function = function;
  return c;
}

void apply_flags(BenchmarkCase& c, const CaseFlags& f) {
  if (!f.label.empty()) c.label = f.label;
  if (f.m) c.multiplicity = *f.m;
  if (f.x0) c.x0 = *f.x0;
  if (f.alpha) c.alpha = *f.alpha;
  if (!f.p.empty()) c.p_values = f.p;
  if (f.iters) c.iterations = *f.iters;
  if (f.precision) c.precision_bits = *f.precision;
}

BenchmarkCase case_from_flags(const CaseFlags& f) {
  if (f.function.empty()) throw Error(ErrorCode::ValidationError, "--function is required");
  BenchmarkCase c = base_case(f.function);
  apply_flags(c, f);
  if (c.p_values.empty()) c.p_values = {"0"};
  return c;
}

std::vector<BenchmarkCase> cases_from_config(const std::string& path, const CaseFlags& f) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ValidationError, "cannot read config '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ValidationError, std::string("config: ") + e.what());
  }
  std::vector<BenchmarkCase> out;
  try {
    for (const auto& jc : doc.at("cases")) {
      BenchmarkCase c = base_case(jc.at("function").get<std::string>());
      if (jc.contains("label")) c.label = jc["label"].get<std::string>();
      if (jc.contains("m")) c.multiplicity = jc["m"].get<int>();
      if (jc.contains("x0")) c.x0 = jc["x0"].get<std::string>();
      if (jc.contains("alpha")) {
        if (jc["alpha"].is_null()) {
          c.alpha.reset();
        } else {
          c.alpha = jc["alpha"].get<std::string>();
        }
      }
      if (jc.contains("p")) c.p_values = jc["p"].get<std::vector<std::string>>();
      if (jc.contains("iters")) c.iterations = jc["iters"].get<int>();
      if (jc.contains("precision")) c.precision_bits = jc["precision"].get<long>();
      apply_flags(c, f);
      if (c.p_values.empty()) c.p_values = {"0"};
      out.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ValidationError, std::string("config: ") + e.what());
  }
  return out;
}

void emit(const Report& report, const OutputFlags& f) {
  const ReportFormat format = parse_report_format(f.format);
  EmitOptions options;
  options.include_timings = f.timings;
  options.csv_digits = f.csv_digits;
  if (f.out.empty()) {
    std::cout << emit_report(report, format, options);
  } else {
    write_report(f.out, report, format, options);
  }
}

MethodSpec method_from_flags(const std::string& name, const Scalar& p, int m) {
  if (name == "family") return m == 1 ? MethodSpec{method::FamilySimple{p}} : MethodSpec{method::FamilyMultiple{p, m}};
  if (name == "newton") return method::Newton{};
  if (name == "chebyshev") return method::Chebyshev{};
  if (name == "halley") return m == 1 ? MethodSpec{method::Halley{}} : MethodSpec{method::HalleyMultiple{m}};
  if (name == "basic3") return method::BasicSequence{3};
  if (name == "basic4") return method::BasicSequence{4};
  if (name == "basic5") return method::BasicSequence{5};
  if (name == "fourth") return method::FourthOrder{};
  throw Error(ErrorCode::ValidationError, "unknown method '" + name + "'");
}

// Single tolerance-mode (or fixed) solve with any method, reported as a
// one-run case.
int cmd_solve(const CaseFlags& cf, const std::string& method_name, std::optional<int> max_iters,
              const OutputFlags& of) {
  BenchmarkCase c = case_from_flags(cf);
  c.validate();
  const EvalContext ctx = EvalContext::make(cf.precision.value_or(EvalContext::kLibraryDefault));
  const std::string text = is_builtin(c.function) ? corpus_entry(c.function).expression : c.function;
  FunctionModel model = FunctionModel::from_text(text, c.label.empty() ? c.function : c.label);
  model.known_multiplicity = c.multiplicity;
  const Scalar x0 = Scalar::parse(ctx, c.x0);
  if (c.alpha) {
    if (*c.alpha == "refine") {
      const bool seeded = is_builtin(c.function) && corpus_entry(c.function).refine_alpha;
      model.known_zero = refine_zero(model, c.multiplicity, seeded ? Scalar::parse(ctx, corpus_entry(c.function).alpha) : x0);
    } else {
      model.known_zero = Scalar::parse(ctx, *c.alpha);
    }
  }
  const std::string p_text = cf.p.empty() ? std::string("0") : cf.p.front();
  const Scalar p = Scalar::parse(ctx, p_text);
  const MethodSpec spec = method_from_flags(method_name, p, c.multiplicity);

  SolverConfig cfg;
  if (max_iters) cfg.max_iters = *max_iters;
  if (cf.iters) {
    cfg.fixed_iterations = *cf.iters;
    cfg.max_iters = std::max(cfg.max_iters, *cf.iters);
  }
  const Trace trace = iterate(model, spec, x0, cfg);

  CaseReport cr;
  cr.label = model.label + " [" + describe(spec) + "]";
  cr.function = text;
  cr.multiplicity = c.multiplicity;
  cr.x0 = c.x0;
  if (model.known_zero) cr.alpha = to_exact_string(*model.known_zero);
  cr.iterations = static_cast<int>(trace.steps());
  cr.precision_bits = ctx.precision_bits;
  RunRecord run;
  run.p = p_text;
  run.status = trace.status;
  run.failure = trace.failure_reason;
  run.iterates = trace.iterates;
  run.residuals = trace.residuals;
  if (trace.errors) run.errors = *trace.errors;
  cr.runs.push_back(std::move(run));
  Report report;
  report.cases.push_back(std::move(cr));
  emit(report, of);
  return trace.status == TraceStatus::Failed ? kExitRunFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubically convergent one-parameter root-finding family: solver and benchmark harness"};
  app.require_subcommand(1);

  CaseFlags solve_case, run_case_flags, sweep_case;
  OutputFlags solve_out, run_out, sweep_out, table_out;

  auto* solve = app.add_subcommand("solve", "Run one method from x0 (tolerance mode unless --iters is given)");
  add_case_flags(solve, solve_case);
  add_output_flags(solve, solve_out);
  std::string method_name = "family";
  std::optional<int> max_iters;
  solve->add_option("--method", method_name,
                    "family | newton | chebyshev | halley | basic3 | basic4 | basic5 | fourth")
      ->capture_default_str();
  solve->add_option("--max-iters", max_iters, "Iteration cap in tolerance mode");

  auto* run = app.add_subcommand("run", "Fixed-iteration runs of the family over one or more p values");
  add_case_flags(run, run_case_flags);
  add_output_flags(run, run_out);
  std::string config_path;
  run->add_option("--config", config_path, "JSON file listing cases; flags override every case");

  auto* sweep = app.add_subcommand("sweep", "Sweep a real p grid and report the best p");
  add_case_flags(sweep, sweep_case);
  add_output_flags(sweep, sweep_out);
  double start = -2, stop = 2;
  int count = 5;
  sweep->add_option("--start", start)->capture_default_str();
  sweep->add_option("--stop", stop)->capture_default_str();
  sweep->add_option("--count", count)->capture_default_str();

  auto* table = app.add_subcommand("table2", "Reproduce the four-function benchmark table");
  add_output_flags(table, table_out);
  long table_precision = EvalContext::kBenchmarkDefault;
  bool verify = false;
  table->add_option("--precision", table_precision)->capture_default_str();
  table->add_flag("--verify", verify, "Compare against the embedded reference values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*solve) return cmd_solve(solve_case, method_name, max_iters, solve_out);

    if (*run) {
      const auto exec = run_out.serial ? Execution::Serial : Execution::Parallel;
      const Report report = config_path.empty() ? run_case(case_from_flags(run_case_flags), exec)
                                                : run_cases(cases_from_config(config_path, run_case_flags), exec);
      emit(report, run_out);
      return report.any_failed() ? kExitRunFailed : kExitOk;
    }

    if (*sweep) {
      const auto exec = sweep_out.serial ? Execution::Serial : Execution::Parallel;
      const Report report = sweep_p(case_from_flags(sweep_case), SweepGrid{start, stop, count}, exec);
      emit(report, sweep_out);
      return report.any_failed() ? kExitRunFailed : kExitOk;
    }

    if (*table) {
      const auto exec = table_out.serial ? Execution::Serial : Execution::Parallel;
      const Report report = run_table2(table_precision, exec);
      emit(report, table_out);
      if (report.any_failed()) return kExitRunFailed;
      if (verify) {
        const auto mismatches = verify_table2(report);
        for (const auto& m : mismatches) {
          std::cerr << "mismatch " << m.function << " p=" << m.p << " " << m.column << ": expected " << m.expected
                    << ", got " << m.actual << "\n";
        }
        std::cerr << (mismatches.empty() ? "verify: all rows match\n"
                                         : "verify: " + std::to_string(mismatches.size()) + " mismatches\n");
        if (!mismatches.empty()) return kExitMismatch;
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::IOError || e.code() == ErrorCode::ValidationError ||
                   e.code() == ErrorCode::ParseError || e.code() == ErrorCode::NonIntegerExponent
               ? kExitValidation
               : kExitRunFailed;
  }
  return kExitOk;
}
