#pragma once

#include <functional>
#include <string>

#include "spindle/generators.hpp"
#include "spindle/json_io.hpp"

namespace spindle {

/// Bound-verification run: a method name, a parameter grid cycled across
/// trials, and deterministic per-trial seeds derived from the base seed.
struct ExperimentConfig {
    std::string method;                  // hamdipath | pathcover | hamcycle-bispindle |
                                         // hamcycle-b1 | outtree | nosecant | star0 | star1
    std::vector<std::vector<int>> grid;  // parameter tuples; may be empty for nosecant
    int trials = 10;
    std::uint64_t seed = 1;
    int n_min = 8;
    int n_max = 20;
    double density = 0.12;
    int oracle_limit = 14;   // exact-chromatic cross-check cap
    int detect_limit = 40;   // exact detector cap for rejection sampling
    int sample_budget = 400;
    int jobs = 0;            // 0 = available parallelism
};

ExperimentConfig experiment_config_from_json(const Json& j);

struct ExperimentReport {
    Json body;          // deterministic; safe to compare byte-for-byte
    int violations = 0;
    int certificates_emitted = 0;
    int certificates_valid = 0;
};

ExperimentReport run_bound_experiment(const ExperimentConfig& config);

std::string report_to_csv(const Json& body);

struct ScanConfig {
    TreeShape family = TreeShape::random_shape;
    int n_min = 8;
    int n_max = 12;
    int trials = 100;
    std::uint64_t seed = 1;
    int jobs = 0;
    std::string archive_dir;  // empty = do not write counterexample files
};

struct ScanReport {
    Json body;
    int counterexamples = 0;
};

/// Conjecture scan: saturated secancy-free instances over the family's trees
/// are searched exactly for a 4-coloring; failures are archived.
ScanReport scan_conjecture(const ScanConfig& config);

/// Runs f(0..count-1) on a pool of `jobs` threads (0 = hardware concurrency);
/// results must be written to per-index slots. The first exception rethrows.
void parallel_for(int count, int jobs, const std::function<void(int)>& f);

}  // namespace spindle
