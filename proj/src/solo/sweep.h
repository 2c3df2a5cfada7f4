#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace solo {

// Cross-validation families: each family draws seeded instances, runs the
// fast decider (or instance compiler) against the exhaustive solver, and
// replays every constructive witness.
enum class SweepFamily { Rooks1D, Pawns, Trees, Graphs, D1, Reductions };

// Throws UnsupportedFamily for an unknown name.
SweepFamily sweepFamilyFromName(const std::string& name);
std::string sweepFamilyName(SweepFamily family);

struct SweepSpec {
    SweepFamily family = SweepFamily::Rooks1D;
    // Family-specific size bound: maximum string length (rooks1d), piece
    // count (pawns, d1) or vertex count (trees, graphs). The reductions
    // family sizes its sources internally to stay within the oracle cap.
    int size = 6;
    std::uint64_t seed = 1;
    int samples = 100;
    // rooks1d only: check every string of length 1..size instead of sampling.
    bool exhaustive = false;
    // rooks1d alphabet: digits 0..maxBudget plus '.'.
    int maxBudget = 2;
    std::uint64_t stateCap = 10'000'000;
};

struct SweepResult {
    int instances = 0;
    int mismatches = 0;
    int overflows = 0;
    // One line per mismatch or overflow, ordered by instance index; each
    // embeds the offending instance for reproduction.
    std::vector<std::string> reports;
};

// Number of instances the spec will run (exhaustive count, or `samples`).
int sweepInstanceCount(const SweepSpec& spec);

// Serial reference implementation: instance i is fully determined by
// (spec, i), so results are reproducible run to run.
SweepResult runSweepSerial(const SweepSpec& spec);

// Identical result to runSweepSerial; when built with OpenMP the instances
// are checked in parallel and the outcomes aggregated in instance order.
SweepResult runSweep(const SweepSpec& spec);

}  // namespace solo
