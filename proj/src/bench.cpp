#include "rootfam/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "rootfam/analysis.hpp"

namespace rootfam {

namespace {

bool is_builtin(std::string_view name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return true;
  }
  return false;
}

struct PreparedCase {
  EvalContext ctx;
  FunctionModel model;
  int multiplicity;
  Scalar x0;
  std::vector<Scalar> p;
  CaseReport header;
};

PreparedCase prepare(const BenchmarkCase& c) {
  c.validate();
  const EvalContext ctx = EvalContext::make(c.precision_bits);
  const bool builtin = is_builtin(c.function);
  const std::string expr_text = builtin ? corpus_entry(c.function).expression : c.function;

  FunctionModel model = FunctionModel::from_text(expr_text, c.label.empty() ? c.function : c.label);
  model.known_multiplicity = c.multiplicity;
  const Scalar x0 = Scalar::parse(ctx, c.x0);

  if (c.alpha) {
    if (*c.alpha == "refine") {
      const bool seeded = builtin && corpus_entry(c.function).refine_alpha;
      const Scalar seed = seeded ? Scalar::parse(ctx, corpus_entry(c.function).alpha) : x0;
      model.known_zero = refine_zero(model, c.multiplicity, seed);
    } else {
      model.known_zero = Scalar::parse(ctx, *c.alpha);
    }
  }

  std::vector<Scalar> ps;
  ps.reserve(c.p_values.size());
  for (const auto& text : c.p_values) ps.push_back(Scalar::parse(ctx, text));

  CaseReport header;
  header.label = model.label;
  header.function = expr_text;
  header.multiplicity = c.multiplicity;
  header.x0 = c.x0;
  if (model.known_zero) header.alpha = to_exact_string(*model.known_zero);
  header.iterations = c.iterations;
  header.precision_bits = c.precision_bits;
  return PreparedCase{ctx, std::move(model), c.multiplicity, x0, std::move(ps), std::move(header)};
}

RunRecord run_one(const PreparedCase& pc, std::size_t p_index, const std::string& p_text) {
  RunRecord rec;
  rec.p = p_text;
  const auto start = std::chrono::steady_clock::now();
  try {
    const MethodSpec spec = method::FamilyMultiple{pc.p[p_index], pc.multiplicity};
    Trace trace = iterate(pc.model, spec, pc.x0, SolverConfig::fixed(pc.header.iterations));
    rec.status = trace.status;
    rec.failure = trace.failure_reason;
    rec.iterates = std::move(trace.iterates);
    rec.residuals = std::move(trace.residuals);
    if (trace.errors) rec.errors = std::move(*trace.errors);
    if (rec.residuals.size() >= 3) {
      try {
        rec.coc = coc(std::span<const Real>(rec.residuals));
      } catch (const Error&) {
        rec.coc.reset();
      }
    }
  } catch (const std::exception& e) {
    rec.status = TraceStatus::Failed;
    rec.failure = e.what();
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

struct Job {
  std::size_t case_index;
  std::size_t p_index;
};

Report execute(const std::vector<BenchmarkCase>& cases, Execution exec) {
  std::vector<PreparedCase> prepared;
  prepared.reserve(cases.size());
  for (const auto& c : cases) prepared.push_back(prepare(c));

  std::vector<Job> jobs;
  for (std::size_t ci = 0; ci < cases.size(); ++ci) {
    for (std::size_t pi = 0; pi < cases[ci].p_values.size(); ++pi) jobs.push_back({ci, pi});
  }

  std::vector<RunRecord> results(jobs.size());
  const long n = static_cast<long>(jobs.size());
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1) default(none) shared(jobs, prepared, cases, results, n)
    for (long i = 0; i < n; ++i) {
      const Job& job = jobs[static_cast<std::size_t>(i)];
      results[static_cast<std::size_t>(i)] =
          run_one(prepared[job.case_index], job.p_index, cases[job.case_index].p_values[job.p_index]);
    }
  } else {
    for (long i = 0; i < n; ++i) {
      const Job& job = jobs[static_cast<std::size_t>(i)];
      results[static_cast<std::size_t>(i)] =
          run_one(prepared[job.case_index], job.p_index, cases[job.case_index].p_values[job.p_index]);
    }
  }

  Report report;
  for (auto& pc : prepared) report.cases.push_back(std::move(pc.header));
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    report.cases[jobs[i].case_index].runs.push_back(std::move(results[i]));
  }
  return report;
}

std::string shortest_decimal(double v) {
  char buf[64];
  for (int digits = 1; digits <= 17; ++digits) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace

BenchmarkCase BenchmarkCase::builtin(std::string_view name) {
  const CorpusEntry& e = corpus_entry(name);
  BenchmarkCase c;
  c.function = e.name;
  c.label = e.name;
  c.multiplicity = e.multiplicity;
  c.x0 = e.x0;
  c.alpha = e.refine_alpha ? std::string("refine") : e.alpha;
  c.p_values = {"-2", "-1", "0", "1", "2"};
  return c;
}

void BenchmarkCase::validate() const {
  if (function.empty()) throw Error(ErrorCode::ValidationError, "case has no function");
  if (multiplicity < 1) throw Error(ErrorCode::ValidationError, "multiplicity must be >= 1");
  if (iterations < 1) throw Error(ErrorCode::ValidationError, "iterations must be >= 1");
  if (p_values.empty()) throw Error(ErrorCode::ValidationError, "p_values must not be empty");
  if (x0.empty()) throw Error(ErrorCode::ValidationError, "case has no x0");
  EvalContext::make(precision_bits);
}

bool Report::any_failed() const {
  for (const auto& c : cases) {
    for (const auto& r : c.runs) {
      if (r.status == TraceStatus::Failed) return true;
    }
  }
  return false;
}

Scalar refine_zero(const FunctionModel& model, int multiplicity, const Scalar& seed, int max_iters) {
  const MethodSpec spec = method::HalleyMultiple{multiplicity};
  Scalar x = seed;
  std::optional<Real> last_step;
  for (int k = 0; k < max_iters; ++k) {
    Scalar next = x;
    try {
      const Jet jet = jet_eval(model.expr, x, 2);
      if (jet[0].is_zero()) break;
      next = step(local_data(jet, x, 2, std::nullopt), spec);
    } catch (const Error&) {
      break;
    }
    const Real dx = modulus(next - x);
    if (dx.is_zero()) break;
    if (last_step && !(dx < *last_step)) break;
    last_step = dx;
    x = next;
  }
  return x;
}

Report run_case(const BenchmarkCase& c, Execution exec) { return execute({c}, exec); }

Report run_cases(const std::vector<BenchmarkCase>& cases, Execution exec) {
  if (cases.empty()) throw Error(ErrorCode::ValidationError, "no cases to run");
  return execute(cases, exec);
}

std::vector<BenchmarkCase> table2_cases(long precision_bits) {
  std::vector<BenchmarkCase> cases;
  for (const char* name : {"f1", "f2", "f3", "f4"}) {
    BenchmarkCase c = BenchmarkCase::builtin(name);
    c.precision_bits = precision_bits;
    cases.push_back(std::move(c));
  }
  return cases;
}

Report run_table2(long precision_bits, Execution exec) { return execute(table2_cases(precision_bits), exec); }

Report sweep_p(const BenchmarkCase& c, const SweepGrid& grid, Execution exec) {
  if (grid.count < 2) throw Error(ErrorCode::ValidationError, "sweep count must be >= 2");
  if (!std::isfinite(grid.start) || !std::isfinite(grid.stop) || !(grid.start < grid.stop)) {
    throw Error(ErrorCode::ValidationError, "sweep needs finite start < stop");
  }
  BenchmarkCase swept = c;
  swept.p_values.clear();
  for (int i = 0; i < grid.count; ++i) {
    const double p = grid.start + (grid.stop - grid.start) * i / (grid.count - 1);
    swept.p_values.push_back(shortest_decimal(p));
  }
  Report report = execute({swept}, exec);

  auto& runs = report.cases.front().runs;
  auto final_value = [](const RunRecord& r) -> const Real& {
    return r.errors.empty() ? r.residuals.back() : r.errors.back();
  };
  std::stable_sort(runs.begin(), runs.end(), [&](const RunRecord& a, const RunRecord& b) {
    const bool fa = a.status == TraceStatus::Failed || a.residuals.empty();
    const bool fb = b.status == TraceStatus::Failed || b.residuals.empty();
    if (fa != fb) return fb;
    if (fa) return false;
    return final_value(a) < final_value(b);
  });
  const RunRecord& best = runs.front();
  if (best.status != TraceStatus::Failed && !best.residuals.empty()) {
    report.sweep = SweepSummary{best.p, to_decimal_string(final_value(best), 6)};
  }
  return report;
}

}  // namespace rootfam
