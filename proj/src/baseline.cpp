#include "chase/baseline.hpp"

#include <chrono>

#include "chase/moves.hpp"

namespace chase {

std::uint64_t SimpleConfig::effective_stuck_threshold(std::size_t n) const noexcept {
    return stuck_threshold != 0 ? stuck_threshold : static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

void SimpleConfig::validate(std::size_t n) const {
    if (budget < 1) throw Error(ErrorKind::Config, "budget must be at least 1");
    if (r < 3 || r > n) {
        throw Error(ErrorKind::Config, "r must lie in [3, " + std::to_string(n) + "], got " + std::to_string(r));
    }
}

TrialStats run_simple(const Instance& instance, const SimpleConfig& config) {
    instance.validate();
    const MatrixCost cost(instance, config.metric);
    return run_simple(instance, cost, config);
}

TrialStats run_simple(const Instance& instance, const CostFunction& cost, const SimpleConfig& config) {
    const std::size_t n = instance.size();
    config.validate(n);
    const std::uint64_t stuck_threshold = config.effective_stuck_threshold(n);
    const auto start = std::chrono::steady_clock::now();

    Rng rng(config.seed);
    Tour current = random_tour(n, rng);
    double current_cost = cost(current.order);
    std::uint64_t evaluations = 1;
    Tour best = current;
    double best_cost = current_cost;
    std::uint64_t rejections = 0;
    std::uint64_t perturbations = 0;

    while (evaluations < config.budget) {
        if (rejections >= stuck_threshold) {
            current = perturb_r(current, config.r, rng);
            current_cost = cost(current.order);
            ++evaluations;
            ++perturbations;
            rejections = 0;
        } else {
            auto step = evader_step(cost, current, current_cost, rng);
            evaluations += step.evaluations_spent;
            if (step.accepted) {
                current = std::move(step.tour);
                current_cost = step.cost;
                rejections = 0;
            } else {
                ++rejections;
            }
        }
        if (current_cost < best_cost) {
            best_cost = current_cost;
            best = current;
        }
    }

    TrialStats stats;
    stats.algorithm = kSimpleLabel;
    stats.instance = instance.name;
    stats.seed = config.seed;
    stats.budget = config.budget;
    stats.r = config.r;
    stats.metric = config.metric;
    stats.best_cost = best_cost;
    stats.best_tour = std::move(best);
    stats.evaluations = evaluations;
    stats.catches = perturbations;
    stats.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return stats;
}

}  // namespace chase
