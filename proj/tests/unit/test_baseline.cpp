#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chase/baseline.hpp"
#include "chase/tsplib.hpp"
#include "test_support.hpp"

using namespace chase;

TEST_CASE("stuck threshold defaults to the swap neighborhood size") {
    SimpleConfig c;
    CHECK(c.effective_stuck_threshold(52) == 1326);
    c.stuck_threshold = 10;
    CHECK(c.effective_stuck_threshold(52) == 10);
    c.r = 2;
    CHECK_THROWS_AS(c.validate(52), Error);
}

TEST_CASE("run_simple on the unit square") {
    SimpleConfig c;
    c.budget = 1000;
    c.seed = 2;
    const auto stats = run_simple(chase::testing::unit_square(), c);
    CHECK(stats.best_cost == 4.0);
    CHECK(stats.algorithm == "simple");
    CHECK(stats.evaluations == 1000);
}

TEST_CASE("run_simple finds the 7-city optimum in at least 90 of 100 seeds") {
    const auto inst = chase::testing::random_instance(7, 77);
    const double optimum = chase::testing::enumerate_cycles_minimum(inst);
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        SimpleConfig c;
        c.budget = 100'000;
        c.seed = seed;
        hits += chase::testing::same_cost(run_simple(inst, c).best_cost, optimum);
    }
    CHECK(hits >= 90);
}

TEST_CASE("run_simple budget audit, determinism and validity") {
    const auto inst = tsplib::load_tsp(chase::testing::data_path("berlin52.tsp"));
    for (std::uint64_t threshold : {0u, 5u, 50u}) {
        SimpleConfig c;
        c.budget = 30'000;
        c.seed = 5;
        c.stuck_threshold = threshold;
        chase::testing::CountingCost counter(inst, c.metric);
        const auto a = run_simple(inst, counter, c);
        CHECK(counter.calls() == a.evaluations);
        CHECK(a.evaluations == c.budget);
        CHECK(is_permutation_of(a.best_tour.order, 52));
        CHECK(a.best_cost == tour_cost(inst, a.best_tour, c.metric));
        const auto b = run_simple(inst, c);
        CHECK(a.best_tour == b.best_tour);
        CHECK(a.catches == b.catches);
        if (threshold == 5) CHECK(a.catches > 0);
    }
}

TEST_CASE("run_simple best cost is non-increasing in the budget") {
    // Same seed, longer budget: the run is a prefix-extension, so the best can
    // only improve.
    const auto inst = chase::testing::random_instance(25, 3);
    double previous = INFINITY;
    for (std::uint64_t budget : {100u, 1000u, 10'000u, 50'000u}) {
        SimpleConfig c;
        c.budget = budget;
        c.seed = 9;
        const double best = run_simple(inst, c).best_cost;
        CHECK(best <= previous);
        previous = best;
    }
}
