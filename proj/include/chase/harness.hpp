#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chase/core.hpp"
#include "chase/trial.hpp"

namespace chase {

enum class Algorithm { ChaseEscape, Simple };

const char* label(Algorithm algorithm) noexcept;
/// Accepts "chase_escape"/"ce" and "simple". Throws Error(Config) otherwise.
Algorithm parse_algorithm(const std::string& label);

/// Settings shared by both algorithms in a benchmark. Trial i runs with seed
/// seed_base + i.
struct BenchConfig {
    std::uint64_t budget = 1'000'000;
    std::size_t r = 3;
    std::uint64_t seed_base = 1;
    MetricMode metric = MetricMode::RealEuclidean;
    std::size_t post_catch_descent = 1;
    bool chaser_noop_allowed = false;
    std::uint64_t stuck_threshold = 0;  // 0: N*(N-1)/2
};

/// Aggregate over repeated trials. sdv_best is the population standard
/// deviation (divisor = trials).
struct BenchStats {
    std::string algorithm;
    std::string instance;
    std::uint64_t budget = 0;
    MetricMode metric = MetricMode::RealEuclidean;
    std::size_t trials = 0;
    double mean_best = 0.0;
    double sdv_best = 0.0;
    double mean_time_seconds = 0.0;
    std::vector<TrialStats> per_trial;
};

/// Runs one trial with seed `seed`, exactly as run_benchmark would.
TrialStats run_trial(const Instance& instance, Algorithm algorithm, const BenchConfig& config,
                     std::uint64_t seed);

/// Runs `trials` independent trials on up to `parallelism` threads. The result
/// does not depend on `parallelism` (wall times aside).
BenchStats run_benchmark(const Instance& instance, Algorithm algorithm, const BenchConfig& config,
                         std::size_t trials, std::size_t parallelism = 1);

/// Recomputes mean/SDV/time from the per-trial rows.
BenchStats aggregate(std::string algorithm, std::string instance, std::uint64_t budget,
                     MetricMode metric, std::vector<TrialStats> per_trial);

struct Comparison {
    BenchStats a;
    BenchStats b;
    double mean_difference = 0.0;  // a.mean_best - b.mean_best
    double welch_t = 0.0;          // descriptive only
    double welch_df = 0.0;
};

/// Throws Error(Config) if the two benchmarks differ in instance, budget or
/// metric.
Comparison compare(const BenchStats& a, const BenchStats& b);

/// Table with Time / Ave. Path / SDV rows followed by the difference line.
std::string format_comparison(const Comparison& comparison);

}  // namespace chase
