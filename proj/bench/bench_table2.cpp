// Times the benchmark table with the serial reference loop and with the
// OpenMP team, and checks that both produce the same report bytes.
//
// Usage: bench_table2 [precision_bits] [repetitions]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "rootfam/bench.hpp"

using namespace rootfam;

namespace {

struct Timing {
  double best = 1e300;
  std::string report;
};

Timing measure(long bits, int reps, Execution exec) {
  Timing t;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    const Report report = run_table2(bits, exec);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.best = std::min(t.best, secs);
    t.report = emit_report(report, ReportFormat::Json);
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  const long bits = argc > 1 ? std::strtol(argv[1], nullptr, 10) : EvalContext::kBenchmarkDefault;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  if (bits < EvalContext::kMinPrecision || reps < 1) {
    std::fprintf(stderr, "usage: %s [precision_bits >= 64] [repetitions >= 1]\n", argv[0]);
    return 1;
  }

  const Timing serial = measure(bits, reps, Execution::Serial);
  const Timing parallel = measure(bits, reps, Execution::Parallel);
  const bool same = serial.report == parallel.report;

  std::printf("precision  %ld bits, best of %d\n", bits, reps);
  std::printf("threads    %d\n", omp_get_max_threads());
  std::printf("serial     %.4f s\n", serial.best);
  std::printf("parallel   %.4f s\n", parallel.best);
  std::printf("speedup    %.2fx\n", serial.best / parallel.best);
  std::printf("identical  %s\n", same ? "yes" : "NO");
  return same ? 0 : 1;
}
