#include "chase/engine.hpp"

#include <chrono>
#include <utility>

#include "chase/moves.hpp"

namespace chase {
namespace {

bool spend_allowed(DuelState& state, const RunConfig& config) {
    if (state.evaluations >= config.budget) state.exhausted = true;
    return !state.exhausted;
}

void refresh_best(DuelState& state) {
    if (state.evader_cost < state.best_cost) {
        state.best_cost = state.evader_cost;
        state.best_tour = state.evader;
    }
}

}  // namespace

void RunConfig::validate(std::size_t n) const {
    if (budget < 2) {
        throw Error(ErrorKind::Config, "budget must be at least 2 (initialization costs two evaluations)");
    }
    if (r < 3 || r > n) {
        throw Error(ErrorKind::Config, "r must lie in [3, " + std::to_string(n) + "], got " + std::to_string(r));
    }
}

DuelState init_duel(const CostFunction& cost, const RunConfig& config, Rng& rng) {
    const std::size_t n = cost.size();
    config.validate(n);

    Tour first = random_tour(n, rng);
    Tour second = random_tour(n, rng);
    const double first_cost = cost(first.order);
    const double second_cost = cost(second.order);

    DuelState state;
    state.evaluations = 2;
    if (second_cost < first_cost) {
        state.evader = std::move(second);
        state.evader_cost = second_cost;
        state.chaser = std::move(first);
        state.chaser_cost = first_cost;
    } else {
        state.evader = std::move(first);
        state.evader_cost = first_cost;
        state.chaser = std::move(second);
        state.chaser_cost = second_cost;
    }
    state.best_cost = state.evader_cost;
    state.best_tour = state.evader;
    state.exhausted = state.evaluations >= config.budget;
    return state;
}

void evader_phase(const CostFunction& cost, DuelState& state, const RunConfig& config, Rng& rng) {
    if (!spend_allowed(state, config)) return;
    auto step = evader_step(cost, state.evader, state.evader_cost, rng);
    state.evaluations += step.evaluations_spent;
    if (step.accepted) {
        state.evader = std::move(step.tour);
        state.evader_cost = step.cost;
    }
}

void chaser_phase(const CostFunction& cost, DuelState& state, const RunConfig& config, Rng& rng) {
    if (state.chaser == state.evader) return;
    if (!spend_allowed(state, config)) return;
    auto step = chaser_step(cost, state.chaser, state.evader, rng, config.chaser_noop_allowed);
    state.evaluations += step.evaluations_spent;
    state.chaser = std::move(step.tour);
    state.chaser_cost = step.cost;
}

void resolve_roles(DuelState& state) {
    if (state.chaser_cost < state.evader_cost) {
        std::swap(state.evader, state.chaser);
        std::swap(state.evader_cost, state.chaser_cost);
    }
    refresh_best(state);
}

void duel_step(const CostFunction& cost, DuelState& state, const RunConfig& config, Rng& rng) {
    evader_phase(cost, state, config, rng);
    chaser_phase(cost, state, config, rng);
    resolve_roles(state);
    if (state.chaser == state.evader) handle_catch(cost, state, config, rng);
    if (state.evaluations >= config.budget) state.exhausted = true;
}

void handle_catch(const CostFunction& cost, DuelState& state, const RunConfig& config, Rng& rng) {
    if (state.chaser != state.evader) {
        throw Error(ErrorKind::Contract, "handle_catch called while chaser and evader differ");
    }
    if (!spend_allowed(state, config)) return;

    const Tour& anchor = state.evader;
    const double anchor_cost = state.evader_cost;
    Tour probe;
    double probe_cost = 0.0;

    for (int attempt = 0;; ++attempt) {
        if (attempt == kMaxRePerturbations) {
            throw Error(ErrorKind::Contract, "post-catch descent returned to the anchor " +
                                                 std::to_string(kMaxRePerturbations) + " times");
        }
        probe = perturb_r(anchor, config.r, rng);
        probe_cost = cost(probe.order);
        ++state.evaluations;
        for (std::size_t k = 0; k < config.post_catch_descent && spend_allowed(state, config); ++k) {
            auto step = evader_step(cost, probe, probe_cost, rng);
            state.evaluations += step.evaluations_spent;
            if (step.accepted) {
                probe = std::move(step.tour);
                probe_cost = step.cost;
            }
        }
        if (probe != anchor) break;
        // Descent undid the perturbation; with no budget left the pair stays
        // identical and the run ends.
        if (!spend_allowed(state, config)) return;
    }

    ++state.catches;
    if (probe_cost < anchor_cost) {
        state.chaser = anchor;
        state.chaser_cost = anchor_cost;
        state.evader = std::move(probe);
        state.evader_cost = probe_cost;
    } else {
        state.chaser = std::move(probe);
        state.chaser_cost = probe_cost;
    }
    refresh_best(state);
}

TrialStats run_chase_escape(const Instance& instance, const RunConfig& config) {
    instance.validate();
    const MatrixCost cost(instance, config.metric);
    return run_chase_escape(instance, cost, config);
}

TrialStats run_chase_escape(const Instance& instance, const CostFunction& cost, const RunConfig& config) {
    config.validate(instance.size());
    const auto start = std::chrono::steady_clock::now();

    Rng rng(config.seed);
    DuelState state = init_duel(cost, config, rng);
    while (state.evaluations < config.budget) duel_step(cost, state, config, rng);

    TrialStats stats;
    stats.algorithm = kChaseEscapeLabel;
    stats.instance = instance.name;
    stats.seed = config.seed;
    stats.budget = config.budget;
    stats.r = config.r;
    stats.metric = config.metric;
    stats.best_cost = state.best_cost;
    stats.best_tour = std::move(state.best_tour);
    stats.evaluations = state.evaluations;
    stats.catches = state.catches;
    stats.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return stats;
}

}  // namespace chase
