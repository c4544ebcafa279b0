// Compares the serial reference runner against the OpenMP-parallel runner
// on the same suite cases: identical records required, wall times reported.
//
//   bench_suites [--quick]

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "valcurve/suites.hpp"

using namespace valcurve;

namespace {

double run_timed(const std::string& name, const std::vector<SuiteCase>& cases,
                 RunMode mode, std::vector<std::string>& lines_out) {
    auto t0 = std::chrono::steady_clock::now();
    auto records = run_cases(name, cases, mode);
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    lines_out.clear();
    for (const auto& r : records) {
        lines_out.push_back(r.record_line());
        if (!r.pass) std::printf("  unexpected failure: %s\n", r.record_line().c_str());
    }
    return secs;
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP not enabled; parallel mode falls back to serial)\n");
#endif

    SuiteConfig cfg;
    cfg.samples = quick ? 8 : 50;

    bool ok = true;
    for (const std::string& name :
         {std::string("idempotent"), std::string("membership"), std::string("product")}) {
        auto cases = build_suite(name, cfg);
        std::vector<std::string> serial_lines, parallel_lines;
        double ts = run_timed(name, cases, RunMode::Serial, serial_lines);
        double tp = run_timed(name, cases, RunMode::Parallel, parallel_lines);
        bool same = serial_lines == parallel_lines;
        ok = ok && same;
        std::printf("%-12s %5zu cases  serial %7.2fs  parallel %7.2fs  speedup %.2fx  %s\n",
                    name.c_str(), cases.size(), ts, tp, tp > 0 ? ts / tp : 0.0,
                    same ? "records identical" : "RECORDS DIFFER");
    }
    return ok ? 0 : 1;
}
