#pragma once

#include <cstdint>

#include "chase/core.hpp"

namespace chase {

struct MoveOutcome {
    Tour tour;
    double cost = 0.0;
    bool accepted = false;
    std::uint64_t evaluations_spent = 0;
};

/// Copy of `tour` with the cities at positions i and j swapped.
Tour two_exchange(const Tour& tour, std::size_t i, std::size_t j);

/// Number of positions at which the two tours hold different cities.
std::size_t hamming(const Tour& a, const Tour& b);

/// One first-improvement attempt: swap two random positions and keep the
/// result only if it is strictly cheaper. Costs one evaluation.
MoveOutcome evader_step(const CostFunction& cost, const Tour& tour, double tour_cost, Rng& rng);

/// Positional alignment toward `evader`: pick a city, then swap it into the
/// position it holds in the evader. Cost-blind; always accepted; one
/// evaluation.
///
/// By default the city is drawn among the misplaced ones only, so each call
/// lowers hamming(chaser, evader) by 1 or 2. With `allow_noop` the city is
/// drawn among all N, and an already aligned pick leaves the tour unchanged
/// (the evaluation is still spent).
///
/// Throws Error(Caught) when the tours are already identical.
MoveOutcome chaser_step(const CostFunction& cost, const Tour& chaser, const Tour& evader,
                        Rng& rng, bool allow_noop = false);

/// Applies a uniformly random non-identity permutation to the cities at r
/// distinct random positions. Requires 3 <= r <= N.
Tour perturb_r(const Tour& tour, std::size_t r, Rng& rng);

}  // namespace chase
