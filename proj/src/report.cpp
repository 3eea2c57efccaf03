#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "rootfam/analysis.hpp"
#include "rootfam/bench.hpp"

namespace rootfam {

using ojson = nlohmann::ordered_json;

namespace {

struct Decomposed {
  std::string sign;
  std::string digits;  // significant digits, no point
  long exponent;       // value = d.ddd x 10^exponent
};

Decomposed decompose(const Real& value, int sig) {
  const std::string text = to_decimal_string(value, sig);
  Decomposed d;
  std::size_t pos = 0;
  if (text[0] == '-') {
    d.sign = "-";
    pos = 1;
  }
  const std::size_t e = text.find('e');
  for (std::size_t k = pos; k < e; ++k) {
    if (text[k] != '.') d.digits.push_back(text[k]);
  }
  d.exponent = std::stol(text.substr(e + 1));
  return d;
}

std::string status_name(TraceStatus s) { return std::string(to_string(s)); }

TraceStatus parse_status(const std::string& s) {
  for (TraceStatus t : {TraceStatus::Converged, TraceStatus::MaxIterations, TraceStatus::FixedComplete,
                        TraceStatus::Failed}) {
    if (to_string(t) == s) return t;
  }
  throw Error(ErrorCode::ValidationError, "unknown run status '" + s + "'");
}

void require_non_empty(const Report& report) {
  std::size_t runs = 0;
  for (const auto& c : report.cases) runs += c.runs.size();
  if (runs == 0) throw Error(ErrorCode::ValidationError, "report is empty");
}

std::string markdown(const Report& report, const EmitOptions& options) {
  std::ostringstream out;
  for (std::size_t ci = 0; ci < report.cases.size(); ++ci) {
    const CaseReport& c = report.cases[ci];
    if (ci > 0) out << "\n";
    out << "### " << c.label << ": `" << c.function << "`\n\n";
    out << "m = " << c.multiplicity << ", x0 = " << c.x0 << ", precision = " << c.precision_bits
        << " bits, iterations = " << c.iterations << "\n\n";

    const std::size_t columns = static_cast<std::size_t>(c.iterations);
    const bool errors = c.alpha.has_value();
    out << "| p |";
    for (std::size_t k = 1; k <= columns; ++k) {
      if (errors) {
        out << " \\|x" << k << " - a\\| |";
      } else {
        out << " \\|f(x" << k << ")\\| |";
      }
    }
    out << " r_c |";
    if (options.include_timings) out << " time [s] |";
    out << "\n|---|";
    for (std::size_t k = 0; k < columns; ++k) out << "---|";
    out << "---|";
    if (options.include_timings) out << "---|";
    out << "\n";

    std::vector<const RunRecord*> failed;
    for (const RunRecord& r : c.runs) {
      out << "| " << r.p << " |";
      const auto& values = errors ? r.errors : r.residuals;
      for (std::size_t k = 1; k <= columns; ++k) {
        out << " " << (k < values.size() ? format_scaled_notation(values[k]) : std::string("-")) << " |";
      }
      out << " " << (r.coc ? format_fixed(*r.coc, 3) : std::string("-")) << " |";
      if (options.include_timings) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
        out << " " << buf << " |";
      }
      out << "\n";
      if (r.status == TraceStatus::Failed) failed.push_back(&r);
    }
    for (const RunRecord* r : failed) out << "\np = " << r->p << " failed: " << r->failure << "\n";
  }
  if (report.sweep) {
    out << "\nbest p = " << report.sweep->argmin_p << " (final error " << report.sweep->argmin_error << ")\n";
  }
  return out.str();
}

std::string csv_number(const Real& v, const EmitOptions& options) {
  return options.csv_digits > 0 ? to_decimal_string(v, options.csv_digits) : v.to_exact_string();
}

std::string csv_number(const Scalar& v, const EmitOptions& options) {
  return options.csv_digits > 0 ? to_decimal_string(v, options.csv_digits) : to_exact_string(v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv(const Report& report, const EmitOptions& options) {
  std::ostringstream out;
  out << "case,label,p,iteration,status,x,error,residual,coc";
  if (options.include_timings) out << ",seconds";
  out << "\n";
  for (std::size_t ci = 0; ci < report.cases.size(); ++ci) {
    const CaseReport& c = report.cases[ci];
    for (const RunRecord& r : c.runs) {
      for (std::size_t k = 0; k < r.iterates.size(); ++k) {
        out << ci << "," << csv_field(c.label) << "," << csv_field(r.p) << "," << k << ","
            << status_name(r.status) << "," << csv_number(r.iterates[k], options) << ",";
        if (k < r.errors.size()) out << csv_number(r.errors[k], options);
        out << ",";
        if (k < r.residuals.size()) out << csv_number(r.residuals[k], options);
        out << ",";
        if (r.coc && k + 1 == r.iterates.size()) out << format_fixed(*r.coc, 3);
        if (options.include_timings) out << "," << r.seconds;
        out << "\n";
      }
      if (r.iterates.empty()) {
        out << ci << "," << csv_field(c.label) << "," << csv_field(r.p) << ",,"
            << status_name(r.status) << ",,,,";
        if (options.include_timings) out << "," << r.seconds;
        out << "\n";
      }
    }
  }
  return out.str();
}

std::string json(const Report& report, const EmitOptions& options) {
  ojson doc;
  doc["format"] = "rootfam-report";
  doc["version"] = 1;
  ojson cases = ojson::array();
  for (const CaseReport& c : report.cases) {
    ojson jc;
    jc["label"] = c.label;
    jc["function"] = c.function;
    jc["multiplicity"] = c.multiplicity;
    jc["x0"] = c.x0;
    jc["alpha"] = c.alpha ? ojson(*c.alpha) : ojson(nullptr);
    jc["iterations"] = c.iterations;
    jc["precision_bits"] = c.precision_bits;
    ojson runs = ojson::array();
    for (const RunRecord& r : c.runs) {
      ojson jr;
      jr["p"] = r.p;
      jr["status"] = status_name(r.status);
      jr["failure"] = r.failure;
      ojson it = ojson::array(), res = ojson::array(), err = ojson::array();
      for (const auto& x : r.iterates) it.push_back(to_exact_string(x));
      for (const auto& v : r.residuals) res.push_back(v.to_exact_string());
      for (const auto& v : r.errors) err.push_back(v.to_exact_string());
      jr["iterates"] = std::move(it);
      jr["residuals"] = std::move(res);
      jr["errors"] = std::move(err);
      jr["coc"] = r.coc ? ojson(r.coc->to_exact_string()) : ojson(nullptr);
      if (options.include_timings) jr["seconds"] = r.seconds;
      runs.push_back(std::move(jr));
    }
    jc["runs"] = std::move(runs);
    cases.push_back(std::move(jc));
  }
  doc["cases"] = std::move(cases);
  if (report.sweep) {
    doc["sweep"] = {{"argmin_p", report.sweep->argmin_p}, {"argmin_error", report.sweep->argmin_error}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "markdown" || name == "markdown-table" || name == "md") return ReportFormat::Markdown;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw Error(ErrorCode::ValidationError, "unknown report format '" + std::string(name) + "'");
}

std::string emit_report(const Report& report, ReportFormat format, const EmitOptions& options) {
  require_non_empty(report);
  switch (format) {
    case ReportFormat::Markdown: return markdown(report, options);
    case ReportFormat::Csv: return csv(report, options);
    case ReportFormat::Json: return json(report, options);
  }
  throw Error(ErrorCode::ValidationError, "unknown report format");
}

void write_report(const std::string& path, const Report& report, ReportFormat format, const EmitOptions& options) {
  const std::string text = emit_report(report, format, options);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IOError, "cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::IOError, "failed writing '" + path + "'");
}

Report parse_report_json(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ValidationError, std::string("report json: ") + e.what());
  }
  try {
    if (doc.value("format", "") != "rootfam-report") {
      throw Error(ErrorCode::ValidationError, "not a rootfam report");
    }
    Report report;
    for (const auto& jc : doc.at("cases")) {
      CaseReport c;
      c.label = jc.at("label").get<std::string>();
      c.function = jc.at("function").get<std::string>();
      c.multiplicity = jc.at("multiplicity").get<int>();
      c.x0 = jc.at("x0").get<std::string>();
      if (!jc.at("alpha").is_null()) c.alpha = jc.at("alpha").get<std::string>();
      c.iterations = jc.at("iterations").get<int>();
      c.precision_bits = jc.at("precision_bits").get<long>();
      const EvalContext ctx = EvalContext::make(c.precision_bits);
      for (const auto& jr : jc.at("runs")) {
        RunRecord r;
        r.p = jr.at("p").get<std::string>();
        r.status = parse_status(jr.at("status").get<std::string>());
        r.failure = jr.at("failure").get<std::string>();
        for (const auto& x : jr.at("iterates")) r.iterates.push_back(Scalar::parse(ctx, x.get<std::string>()));
        for (const auto& v : jr.at("residuals")) r.residuals.push_back(Real::parse(v.get<std::string>(), c.precision_bits));
        for (const auto& v : jr.at("errors")) r.errors.push_back(Real::parse(v.get<std::string>(), c.precision_bits));
        if (!jr.at("coc").is_null()) r.coc = Real::parse(jr.at("coc").get<std::string>(), c.precision_bits);
        if (jr.contains("seconds")) r.seconds = jr.at("seconds").get<double>();
        c.runs.push_back(std::move(r));
      }
      report.cases.push_back(std::move(c));
    }
    if (doc.contains("sweep")) {
      const auto& s = doc.at("sweep");
      report.sweep = SweepSummary{s.at("argmin_p").get<std::string>(), s.at("argmin_error").get<std::string>()};
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ValidationError, std::string("report json: ") + e.what());
  }
}

std::string format_scaled_notation(const Real& value) {
  if (value.is_zero()) return "0";
  const Decomposed d = decompose(value, 3);
  if (d.exponent == 0) return d.sign + d.digits.substr(0, 1) + "." + d.digits.substr(1);
  if (d.exponent == -1) return d.sign + "0." + d.digits;
  return d.sign + d.digits.substr(0, 1) + "." + d.digits.substr(1) + "(" + std::to_string(d.exponent) + ")";
}

// ---------------------------------------------------------------------------
// Golden table

const std::vector<GoldenRow>& table2_golden() {
  static const std::vector<GoldenRow> rows = {
      {"f1", -2, {"2.29e-2", "1.40e-7", "2.84e-23"}, 3.011, 0.01},
      {"f1", -1, {"8.91e-4", "7.25e-12", "3.90e-36"}, 3.000, 0.01},
      {"f1", 0, {"7.08e-2", "3.64e-6", "3.39e-19"}, 3.000, 0.01},
      {"f1", 1, {"1.11e-1", "1.42e-2", "3.06e-8"}, 3.000, 0.01},
      {"f1", 2, {"1.72e-1", "1.19e-5", "1.72e-17"}, 2.846, 0.05},
      {"f2", -2, {"4.93e-2", "4.34e-4", "2.66e-10"}, 3.067, 0.01},
      {"f2", -1, {"1.87e-2", "1.17e-5", "2.82e-15"}, 3.013, 0.01},
      {"f2", 0, {"7.99e-4", "1.29e-10", "5.50e-31"}, 3.000, 0.01},
      {"f2", 1, {"1.10e-2", "1.65e-6", "5.64e-18"}, 2.994, 0.01},
      {"f2", 2, {"1.93e-2", "2.04e-5", "2.32e-14"}, 2.991, 0.01},
      {"f3", -2, {"6.17e-2", "1.74e-4", "3.45e-12"}, 3.031, 0.01},
      {"f3", -1, {"3.30e-2", "1.44e-5", "1.18e-15"}, 3.007, 0.01},
      {"f3", 0, {"1.33e-2", "2.94e-7", "5.32e-20"}, 3.000, 0.01},
      {"f3", 1, {"7.04e-2", "1.36e-7", "9.83e-22"}, 2.999, 0.01},
      {"f3", 2, {"1.06e-2", "7.59e-7", "2.85e-19"}, 2.997, 0.01},
      {"f4", -2, {"1.38e-2", "4.47e-8", "1.78e-24"}, 3.067, 0.01},
      {"f4", -1, {"3.21e-3", "5.59e-10", "2.91e-30"}, 3.001, 0.01},
      {"f4", 0, {"1.08e-3", "2.08e-11", "1.50e-34"}, 3.000, 0.01},
      {"f4", 1, {"1.58e-4", "6.52e-14", "4.63e-42"}, 3.000, 0.01},
      {"f4", 2, {"3.53e-4", "7.37e-13", "6.68e-39"}, 3.000, 0.01},
  };
  return rows;
}

std::vector<Mismatch> verify_table2(const Report& report) {
  std::vector<Mismatch> out;
  for (const GoldenRow& row : table2_golden()) {
    const std::string p = std::to_string(row.p);
    const RunRecord* run = nullptr;
    for (const CaseReport& c : report.cases) {
      if (c.label != row.function) continue;
      for (const RunRecord& r : c.runs) {
        if (r.p == p) run = &r;
      }
    }
    if (run == nullptr) {
      out.push_back({row.function, row.p, "run", "present", "missing"});
      continue;
    }
    for (int k = 0; k < 3; ++k) {
      const std::string column = "|x" + std::to_string(k + 1) + " - a|";
      const std::size_t idx = static_cast<std::size_t>(k) + 1;
      if (idx >= run->errors.size()) {
        out.push_back({row.function, row.p, column, row.errors[k], "missing"});
        continue;
      }
      const Real expected = Real::parse(row.errors[k], 64);
      const Decomposed want = decompose(expected, 3);
      const Decomposed got = decompose(run->errors[idx], 3);
      const double want_m = std::stod(want.digits) / 100.0;
      const double got_m = std::stod(got.digits) / 100.0;
      const bool same = want.exponent == got.exponent && std::fabs(want_m - got_m) <= 0.05 + 1e-12;
      if (!same) out.push_back({row.function, row.p, column, row.errors[k], to_decimal_string(run->errors[idx], 3)});
    }
    if (!run->coc) {
      out.push_back({row.function, row.p, "r_c", format_fixed(Real::from_double(row.coc, 64), 3), "undefined"});
    } else if (std::fabs(run->coc->to_double() - row.coc) > row.coc_tolerance + 1e-12) {
      out.push_back({row.function, row.p, "r_c", format_fixed(Real::from_double(row.coc, 64), 3),
                     format_fixed(*run->coc, 3)});
    }
  }
  return out;
}

}  // namespace rootfam
