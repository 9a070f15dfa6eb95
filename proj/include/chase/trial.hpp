#pragma once

#include <cstdint>
#include <string>

#include "chase/core.hpp"

namespace chase {

/// Result of one run of either algorithm, plus the settings needed to
/// reproduce it (these become the columns of the results CSV).
struct TrialStats {
    std::string algorithm;  // "chase_escape" or "simple"
    std::string instance;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::size_t r = 0;
    MetricMode metric = MetricMode::RealEuclidean;
    double best_cost = 0.0;
    Tour best_tour;
    std::uint64_t evaluations = 0;
    // Catch events for chase_escape; perturbation restarts for simple.
    std::uint64_t catches = 0;
    double wall_time_seconds = 0.0;
};

}  // namespace chase
