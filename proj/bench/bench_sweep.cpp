// Benchmarks the parallel sweep against the serial reference and checks that
// both produce identical results. Build target: bench_sweep. Usage:
//   bench_sweep [samples]      (default 400 per family)
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "solo/sweep.h"

using solo::SweepFamily;
using solo::SweepResult;
using solo::SweepSpec;

namespace {

double timeRun(SweepResult (*run)(const SweepSpec&), const SweepSpec& spec, SweepResult& out) {
    const auto start = std::chrono::steady_clock::now();
    out = run(spec);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool sameResult(const SweepResult& a, const SweepResult& b) {
    return a.instances == b.instances && a.mismatches == b.mismatches &&
           a.overflows == b.overflows && a.reports == b.reports;
}

}  // namespace

int main(int argc, char** argv) {
    const int samples = argc > 1 ? std::atoi(argv[1]) : 400;
    struct Row {
        SweepFamily family;
        int size;
    };
    const Row rows[] = {
        {SweepFamily::Rooks1D, 8}, {SweepFamily::Pawns, 7},  {SweepFamily::Trees, 9},
        {SweepFamily::Graphs, 6},  {SweepFamily::D1, 5},     {SweepFamily::Reductions, 0},
    };
    std::cout << std::left << std::setw(12) << "family" << std::right << std::setw(10)
              << "instances" << std::setw(12) << "serial (s)" << std::setw(14)
              << "parallel (s)" << std::setw(10) << "speedup" << '\n';
    int failures = 0;
    for (const auto& row : rows) {
        SweepSpec spec;
        spec.family = row.family;
        spec.size = row.size;
        spec.seed = 7;
        spec.samples = samples;
        SweepResult serial, parallel;
        const double serialSeconds = timeRun(solo::runSweepSerial, spec, serial);
        const double parallelSeconds = timeRun(solo::runSweep, spec, parallel);
        if (!sameResult(serial, parallel)) {
            std::cerr << "MISMATCH between serial and parallel sweep for "
                      << solo::sweepFamilyName(row.family) << '\n';
            ++failures;
        }
        if (serial.mismatches != 0) {
            std::cerr << "decider/oracle mismatches in family "
                      << solo::sweepFamilyName(row.family) << '\n';
            ++failures;
        }
        std::cout << std::left << std::setw(12) << solo::sweepFamilyName(row.family)
                  << std::right << std::setw(10) << serial.instances << std::setw(12)
                  << std::fixed << std::setprecision(3) << serialSeconds << std::setw(14)
                  << parallelSeconds << std::setw(10) << std::setprecision(2)
                  << (parallelSeconds > 0 ? serialSeconds / parallelSeconds : 0.0) << '\n';
    }
    return failures == 0 ? 0 : 1;
}
