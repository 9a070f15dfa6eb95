#pragma once

#include <cstdint>

#include "chase/core.hpp"
#include "chase/trial.hpp"

namespace chase {

struct RunConfig {
    std::uint64_t budget = 1'000'000;  // max cost evaluations, including initialization
    std::size_t r = 3;                 // cities permuted on a catch
    std::uint64_t seed = 0;
    MetricMode metric = MetricMode::RealEuclidean;
    std::size_t post_catch_descent = 1;  // evader attempts granted to the perturbed state
    bool chaser_noop_allowed = false;

    /// Throws Error(Config) unless budget >= 2 and 3 <= r <= n.
    void validate(std::size_t n) const;
};

/// The evader/chaser pair. The evader always holds the cheaper state.
struct DuelState {
    Tour evader;
    Tour chaser;
    double evader_cost = 0.0;
    double chaser_cost = 0.0;
    std::uint64_t evaluations = 0;
    double best_cost = 0.0;
    Tour best_tour;
    std::uint64_t catches = 0;
    bool exhausted = false;  // budget reached; no further steps allowed
};

inline constexpr const char* kChaseEscapeLabel = "chase_escape";
inline constexpr int kMaxRePerturbations = 100;

/// Two independent uniform tours; the cheaper (first-drawn on a tie) is the
/// evader. Spends two evaluations.
DuelState init_duel(const CostFunction& cost, const RunConfig& config, Rng& rng);

// The phases of one duel step, exposed individually so that harnesses can
// drive a subset of them. Each evaluation-spending phase is a no-op once the
// budget is reached.

/// Evader descent attempt (one evaluation).
void evader_phase(const CostFunction& cost, DuelState& state, const RunConfig& config, Rng& rng);
/// Chaser alignment move (one evaluation) when the tours differ.
void chaser_phase(const CostFunction& cost, DuelState& state, const RunConfig& config, Rng& rng);
/// Swaps the labels when the chaser is strictly cheaper, then refreshes best_*.
void resolve_roles(DuelState& state);

/// Evader phase, chaser phase, role resolution, then catch handling if the
/// tours coincide. Never spends past config.budget: a phase that would start
/// with the budget used up is skipped and `exhausted` is set.
void duel_step(const CostFunction& cost, DuelState& state, const RunConfig& config, Rng& rng);

/// Repulsion after a catch. Perturbs the shared tour A by r cities, grants the
/// perturbed state post_catch_descent evader attempts, then gives the evader
/// label to the cheaper of the two (A keeps it on a tie). Re-perturbs from A if
/// the descent lands back on A.
///
/// Throws Error(Contract) when called with distinct tours.
void handle_catch(const CostFunction& cost, DuelState& state, const RunConfig& config, Rng& rng);

/// Complete run: init_duel, then duel_step until the budget is spent.
TrialStats run_chase_escape(const Instance& instance, const RunConfig& config);
/// Same, evaluating through a caller-supplied cost function.
TrialStats run_chase_escape(const Instance& instance, const CostFunction& cost,
                            const RunConfig& config);

}  // namespace chase
