/**
 * @file bench.hpp
 * @brief Benchmark cases, fixed-iteration runs of the multiple-zero family over
 *        lists of p, parameter sweeps, the reference-table reproduction and
 *        report serialization (markdown, csv, json).
 *
 * Independent (case, p) runs execute on an OpenMP team; `Execution::Serial`
 * keeps a plain loop over the same job list as the reference path. Results
 * are merged by (case index, p index) so the report bytes do not depend on
 * the execution mode or thread count.
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rootfam/solvers.hpp"

namespace rootfam {

struct BenchmarkCase {
  /// Expression text or a built-in name (f1..f4, g2).
  std::string function;
  std::string label;
  int multiplicity = 1;
  std::string x0;
  /// Complex literal, "refine", or unset (no error columns).
  std::optional<std::string> alpha;
  std::vector<std::string> p_values;
  int iterations = 3;
  long precision_bits = EvalContext::kBenchmarkDefault;

  /// Built-in row with multiplicity, x0 and alpha pre-filled and p in {-2..2}.
  static BenchmarkCase builtin(std::string_view name);
  /// Throws ValidationError.
  void validate() const;
};

struct RunRecord {
  std::string p;
  TraceStatus status = TraceStatus::Failed;
  std::string failure;
  std::vector<Scalar> iterates;
  std::vector<Real> residuals;
  std::vector<Real> errors;
  std::optional<Real> coc;
  double seconds = 0.0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct CaseReport {
  std::string label;
  std::string function;
  int multiplicity = 1;
  std::string x0;
  /// Exact rendering of the zero the errors were measured against.
  std::optional<std::string> alpha;
  int iterations = 0;
  long precision_bits = 0;
  std::vector<RunRecord> runs;

  friend bool operator==(const CaseReport&, const CaseReport&) = default;
};

struct SweepSummary {
  std::string argmin_p;
  std::string argmin_error;

  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

struct Report {
  std::vector<CaseReport> cases;
  std::optional<SweepSummary> sweep;

  bool any_failed() const;
  friend bool operator==(const Report&, const Report&) = default;
};

enum class Execution { Serial, Parallel };

/// Zero of `model` refined from `seed` with the Halley-like multiple-zero
/// method until the step size stops shrinking.
Scalar refine_zero(const FunctionModel& model, int multiplicity, const Scalar& seed, int max_iters = 200);

Report run_case(const BenchmarkCase& c, Execution exec = Execution::Parallel);
Report run_cases(const std::vector<BenchmarkCase>& cases, Execution exec = Execution::Parallel);

/// f1..f4 x p in {-2, -1, 0, 1, 2}, three iterations each.
std::vector<BenchmarkCase> table2_cases(long precision_bits = EvalContext::kBenchmarkDefault);
Report run_table2(long precision_bits = EvalContext::kBenchmarkDefault, Execution exec = Execution::Parallel);

struct SweepGrid {
  double start;
  double stop;
  int count;
};

/// One run per grid point (overriding c.p_values); runs sorted by final
/// error, failures last; `sweep` names the argmin.
Report sweep_p(const BenchmarkCase& c, const SweepGrid& grid, Execution exec = Execution::Parallel);

enum class ReportFormat { Markdown, Csv, Json };
ReportFormat parse_report_format(std::string_view name);

struct EmitOptions {
  bool include_timings = false;
  /// Significant digits for csv numbers; 0 writes exact values.
  int csv_digits = 0;
};

/// Deterministic for a given report. Throws ValidationError on an empty report.
std::string emit_report(const Report& report, ReportFormat format, const EmitOptions& options = {});
/// Throws IOError when the file cannot be written.
void write_report(const std::string& path, const Report& report, ReportFormat format,
                  const EmitOptions& options = {});
Report parse_report_json(std::string_view text);

/// "A(-h)" rendering used in the markdown tables: 3 significant digits;
/// values in [0.1, 10) are written as plain decimals.
std::string format_scaled_notation(const Real& value);

/// Reference values for the 20 rows of the benchmark table.
struct GoldenRow {
  std::string function;
  int p;
  std::string errors[3];
  double coc;
  double coc_tolerance;
};
const std::vector<GoldenRow>& table2_golden();

struct Mismatch {
  std::string function;
  int p;
  std::string column;
  std::string expected;
  std::string actual;
};

/// Compares a run_table2 report against the golden rows: every error must
/// match the reference exponent and the mantissa to 2 significant digits,
/// every r_c within its tolerance.
std::vector<Mismatch> verify_table2(const Report& report);

}  // namespace rootfam
