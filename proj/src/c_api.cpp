#include "chase_escape/chase_escape.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <sstream>
#include <span>
#include <string>
#include <vector>

#include "chase/baseline.hpp"
#include "chase/core.hpp"
#include "chase/engine.hpp"
#include "chase/harness.hpp"
#include "chase/svg.hpp"
#include "chase/tsplib.hpp"

struct ce_instance {
    chase::Instance value;
};
struct ce_tour {
    chase::Tour value;
};
struct ce_trial {
    chase::TrialStats value;
};
struct ce_bench {
    chase::BenchStats value;
};

namespace {

thread_local std::string last_error;

ce_status fail(ce_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

ce_status status_of(chase::ErrorKind kind) {
    using chase::ErrorKind;
    switch (kind) {
        case ErrorKind::Validation: return CE_ERR_VALIDATION;
        case ErrorKind::Domain: return CE_ERR_DOMAIN;
        case ErrorKind::Parse: return CE_ERR_PARSE;
        case ErrorKind::Integrity: return CE_ERR_INTEGRITY;
        case ErrorKind::UnsupportedFormat: return CE_ERR_UNSUPPORTED;
        case ErrorKind::Size: return CE_ERR_SIZE;
        case ErrorKind::Io: return CE_ERR_IO;
        case ErrorKind::Config: return CE_ERR_CONFIG;
        case ErrorKind::Caught: return CE_ERR_CAUGHT;
        case ErrorKind::Contract: return CE_ERR_CONTRACT;
    }
    return CE_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
ce_status guarded(F&& body) noexcept {
    try {
        body();
        return CE_OK;
    } catch (const chase::Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const std::exception& e) {
        return fail(CE_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(CE_ERR_INTERNAL, "unknown exception");
    }
}

chase::MetricMode to_metric(ce_metric metric) {
    if (metric == CE_METRIC_REAL) return chase::MetricMode::RealEuclidean;
    if (metric == CE_METRIC_ROUNDED) return chase::MetricMode::RoundedEuclidean;
    throw chase::Error(chase::ErrorKind::Config, "unknown metric value " + std::to_string(metric));
}

chase::Algorithm to_algorithm(ce_algorithm algorithm) {
    if (algorithm == CE_ALGO_CHASE_ESCAPE) return chase::Algorithm::ChaseEscape;
    if (algorithm == CE_ALGO_SIMPLE) return chase::Algorithm::Simple;
    throw chase::Error(chase::ErrorKind::Config, "unknown algorithm value " + std::to_string(algorithm));
}

chase::BenchConfig to_bench_config(const ce_config& c) {
    chase::BenchConfig b;
    b.budget = c.budget;
    b.r = c.r;
    b.seed_base = c.seed;
    b.metric = to_metric(c.metric);
    b.post_catch_descent = c.post_catch_descent;
    b.chaser_noop_allowed = c.chaser_noop_allowed != 0;
    b.stuck_threshold = c.stuck_threshold;
    return b;
}

#define CE_REQUIRE(ptr) \
    if ((ptr) == nullptr) return fail(CE_ERR_NULL_ARGUMENT, #ptr " is NULL")

std::ofstream open_out(const char* path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw chase::Error(chase::ErrorKind::Io, std::string("cannot open ") + path + " for writing");
    return out;
}

}  // namespace

extern "C" {

const char* ce_version(void) { return "1.0.0"; }

const char* ce_last_error(void) { return last_error.c_str(); }

const char* ce_status_string(ce_status status) {
    switch (status) {
        case CE_OK: return "ok";
        case CE_ERR_VALIDATION: return "validation error";
        case CE_ERR_DOMAIN: return "domain error";
        case CE_ERR_PARSE: return "parse error";
        case CE_ERR_INTEGRITY: return "integrity error";
        case CE_ERR_UNSUPPORTED: return "unsupported format";
        case CE_ERR_SIZE: return "size error";
        case CE_ERR_IO: return "I/O error";
        case CE_ERR_CONFIG: return "config error";
        case CE_ERR_CAUGHT: return "caught";
        case CE_ERR_CONTRACT: return "contract violation";
        case CE_ERR_NULL_ARGUMENT: return "null argument";
        case CE_ERR_BUFFER_TOO_SMALL: return "buffer too small";
        case CE_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void ce_config_default(ce_config* config) {
    if (config == nullptr) return;
    config->budget = 1'000'000;
    config->r = 3;
    config->seed = 1;
    config->metric = CE_METRIC_REAL;
    config->post_catch_descent = 1;
    config->chaser_noop_allowed = 0;
    config->stuck_threshold = 0;
}

ce_status ce_instance_load(const char* path, ce_instance** out) {
    CE_REQUIRE(path);
    CE_REQUIRE(out);
    return guarded([&] { *out = new ce_instance{chase::tsplib::load_tsp(path)}; });
}

ce_status ce_instance_parse(const char* text, ce_instance** out) {
    CE_REQUIRE(text);
    CE_REQUIRE(out);
    return guarded([&] {
        std::istringstream in(text);
        *out = new ce_instance{chase::tsplib::parse_tsp(in)};
    });
}

void ce_instance_free(ce_instance* instance) { delete instance; }

size_t ce_instance_size(const ce_instance* instance) { return instance ? instance->value.size() : 0; }

const char* ce_instance_name(const ce_instance* instance) {
    return instance ? instance->value.name.c_str() : "";
}

ce_status ce_tour_load(const char* path, size_t n, ce_tour** out) {
    CE_REQUIRE(path);
    CE_REQUIRE(out);
    return guarded([&] { *out = new ce_tour{chase::tsplib::load_tour(path, n)}; });
}

ce_status ce_tour_from_array(const int32_t* order, size_t n, ce_tour** out) {
    CE_REQUIRE(order);
    CE_REQUIRE(out);
    return guarded([&] {
        chase::Tour tour;
        tour.order.assign(order, order + n);
        chase::validate_tour(tour.order, n);
        *out = new ce_tour{std::move(tour)};
    });
}

void ce_tour_free(ce_tour* tour) { delete tour; }

size_t ce_tour_size(const ce_tour* tour) { return tour ? tour->value.size() : 0; }

ce_status ce_tour_copy(const ce_tour* tour, int32_t* order, size_t capacity) {
    CE_REQUIRE(tour);
    CE_REQUIRE(order);
    const size_t count = std::min(capacity, tour->value.size());
    for (size_t i = 0; i < count; ++i) order[i] = tour->value.order[i];
    return CE_OK;
}

ce_status ce_tour_save(const ce_tour* tour, const char* name, const char* path) {
    CE_REQUIRE(tour);
    CE_REQUIRE(path);
    return guarded([&] {
        auto out = open_out(path);
        chase::tsplib::write_tour(out, tour->value, name ? name : "tour");
    });
}

ce_status ce_tour_cost(const ce_instance* instance, const ce_tour* tour, ce_metric metric, double* cost) {
    CE_REQUIRE(instance);
    CE_REQUIRE(tour);
    CE_REQUIRE(cost);
    return guarded([&] { *cost = chase::tour_cost(instance->value, tour->value, to_metric(metric)); });
}

ce_status ce_oracle(const ce_instance* instance, ce_metric metric, double* cost, ce_tour** tour) {
    CE_REQUIRE(instance);
    CE_REQUIRE(cost);
    return guarded([&] {
        auto [best, best_cost] = chase::brute_force_optimum(instance->value, to_metric(metric));
        *cost = best_cost;
        if (tour) *tour = new ce_tour{std::move(best)};
    });
}

ce_status ce_solve(const ce_instance* instance, ce_algorithm algorithm, const ce_config* config, ce_trial** out) {
    CE_REQUIRE(instance);
    CE_REQUIRE(config);
    CE_REQUIRE(out);
    return guarded([&] {
        const auto bench = to_bench_config(*config);
        *out = new ce_trial{chase::run_trial(instance->value, to_algorithm(algorithm), bench, config->seed)};
    });
}

void ce_trial_free(ce_trial* trial) { delete trial; }
double ce_trial_best_cost(const ce_trial* trial) { return trial ? trial->value.best_cost : 0.0; }
uint64_t ce_trial_evaluations(const ce_trial* trial) { return trial ? trial->value.evaluations : 0; }
uint64_t ce_trial_catches(const ce_trial* trial) { return trial ? trial->value.catches : 0; }
double ce_trial_wall_time(const ce_trial* trial) { return trial ? trial->value.wall_time_seconds : 0.0; }
uint64_t ce_trial_seed(const ce_trial* trial) { return trial ? trial->value.seed : 0; }

ce_status ce_trial_best_tour(const ce_trial* trial, ce_tour** out) {
    CE_REQUIRE(trial);
    CE_REQUIRE(out);
    return guarded([&] { *out = new ce_tour{trial->value.best_tour}; });
}

ce_status ce_bench_run(const ce_instance* instance, ce_algorithm algorithm, const ce_config* config,
                       size_t trials, size_t parallelism, ce_bench** out) {
    CE_REQUIRE(instance);
    CE_REQUIRE(config);
    CE_REQUIRE(out);
    return guarded([&] {
        *out = new ce_bench{chase::run_benchmark(instance->value, to_algorithm(algorithm),
                                                 to_bench_config(*config), trials, parallelism)};
    });
}

void ce_bench_free(ce_bench* bench) { delete bench; }
size_t ce_bench_trials(const ce_bench* bench) { return bench ? bench->value.trials : 0; }
double ce_bench_mean_best(const ce_bench* bench) { return bench ? bench->value.mean_best : 0.0; }
double ce_bench_sdv_best(const ce_bench* bench) { return bench ? bench->value.sdv_best : 0.0; }
double ce_bench_mean_time(const ce_bench* bench) { return bench ? bench->value.mean_time_seconds : 0.0; }

ce_status ce_bench_trial_best_tour(const ce_bench* bench, size_t index, ce_tour** out) {
    CE_REQUIRE(bench);
    CE_REQUIRE(out);
    if (index >= bench->value.per_trial.size()) return fail(CE_ERR_DOMAIN, "trial index out of range");
    return guarded([&] { *out = new ce_tour{bench->value.per_trial[index].best_tour}; });
}

ce_status ce_results_write_csv(const ce_bench* const* benches, size_t count, const char* path) {
    CE_REQUIRE(benches);
    CE_REQUIRE(path);
    return guarded([&] {
        std::vector<chase::TrialStats> rows;
        for (size_t i = 0; i < count; ++i) {
            if (benches[i] == nullptr) throw chase::Error(chase::ErrorKind::Domain, "NULL benchmark in list");
            const auto& trials = benches[i]->value.per_trial;
            rows.insert(rows.end(), trials.begin(), trials.end());
        }
        auto out = open_out(path);
        chase::tsplib::write_results_csv(rows, out);
    });
}

ce_status ce_trial_write_csv(const ce_trial* trial, const char* path) {
    CE_REQUIRE(trial);
    CE_REQUIRE(path);
    return guarded([&] {
        auto out = open_out(path);
        chase::tsplib::write_results_csv(std::span(&trial->value, 1), out);
    });
}

ce_status ce_compare_format(const ce_bench* a, const ce_bench* b, char* buffer, size_t capacity, size_t* required) {
    CE_REQUIRE(a);
    CE_REQUIRE(b);
    std::string text;
    const ce_status st = guarded([&] { text = chase::format_comparison(chase::compare(a->value, b->value)); });
    if (st != CE_OK) return st;
    if (required) *required = text.size() + 1;
    if (buffer == nullptr) return CE_OK;
    if (capacity < text.size() + 1) return fail(CE_ERR_BUFFER_TOO_SMALL, "comparison text does not fit");
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    return CE_OK;
}

ce_status ce_compare_mean_difference(const ce_bench* a, const ce_bench* b, double* difference) {
    CE_REQUIRE(a);
    CE_REQUIRE(b);
    CE_REQUIRE(difference);
    return guarded([&] { *difference = chase::compare(a->value, b->value).mean_difference; });
}

ce_status ce_render_svg(const ce_instance* instance, const ce_tour* tour, ce_metric metric, const char* path) {
    CE_REQUIRE(instance);
    CE_REQUIRE(tour);
    CE_REQUIRE(path);
    return guarded([&] {
        if (tour->value.size() != instance->value.size()) {
            throw chase::Error(chase::ErrorKind::Integrity, "tour has " + std::to_string(tour->value.size()) +
                                                                " cities, instance has " +
                                                                std::to_string(instance->value.size()));
        }
        const std::string svg = chase::render_svg(instance->value, tour->value, to_metric(metric));
        auto out = open_out(path);
        out << svg;
        if (!out) throw chase::Error(chase::ErrorKind::Io, std::string("failed writing ") + path);
    });
}

}  // extern "C"
