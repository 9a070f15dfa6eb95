#pragma once

#include <cstdint>

#include "chase/core.hpp"
#include "chase/trial.hpp"

namespace chase {

/// Settings for the descent-with-perturbation comparator.
struct SimpleConfig {
    std::uint64_t budget = 1'000'000;
    std::size_t r = 3;
    std::uint64_t seed = 0;
    MetricMode metric = MetricMode::RealEuclidean;
    // Consecutive rejected descent attempts that count as a local minimum.
    // 0 selects N*(N-1)/2, the size of the swap neighborhood.
    std::uint64_t stuck_threshold = 0;

    std::uint64_t effective_stuck_threshold(std::size_t n) const noexcept;
    void validate(std::size_t n) const;
};

inline constexpr const char* kSimpleLabel = "simple";

/// First-improvement swap descent from one random tour. After
/// stuck_threshold consecutive rejections the current tour is replaced by an
/// r-city perturbation of itself, accepted unconditionally. Returns the best
/// tour seen; `catches` counts the perturbations.
TrialStats run_simple(const Instance& instance, const SimpleConfig& config);
TrialStats run_simple(const Instance& instance, const CostFunction& cost,
                      const SimpleConfig& config);

}  // namespace chase
