// chase-escape: command-line front end over the C API.
//
//   chase-escape solve  <file.tsp> [--algo ce|simple] [--budget N] [--r R] [--seed S] ...
//   chase-escape bench  <file.tsp> [--budget N] [--trials T] [--parallelism P] [--out-csv F]
//   chase-escape render <file.tsp> <file.tour> <out.svg>
//   chase-escape oracle <file.tsp>
//
// Exit codes: 0 success, 1 internal error, 2 usage or input error.

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "chase_escape/chase_escape.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

struct InstanceDeleter {
    void operator()(ce_instance* p) const { ce_instance_free(p); }
};
struct TourDeleter {
    void operator()(ce_tour* p) const { ce_tour_free(p); }
};
struct TrialDeleter {
    void operator()(ce_trial* p) const { ce_trial_free(p); }
};
struct BenchDeleter {
    void operator()(ce_bench* p) const { ce_bench_free(p); }
};
using InstancePtr = std::unique_ptr<ce_instance, InstanceDeleter>;
using TourPtr = std::unique_ptr<ce_tour, TourDeleter>;
using TrialPtr = std::unique_ptr<ce_trial, TrialDeleter>;
using BenchPtr = std::unique_ptr<ce_bench, BenchDeleter>;

// Thrown to unwind to main() with an exit code after printing a message.
struct Exit {
    int code;
};

int exit_code_for(ce_status status) {
    switch (status) {
        case CE_ERR_VALIDATION:
        case CE_ERR_DOMAIN:
        case CE_ERR_PARSE:
        case CE_ERR_INTEGRITY:
        case CE_ERR_UNSUPPORTED:
        case CE_ERR_SIZE:
        case CE_ERR_IO:
        case CE_ERR_CONFIG:
            return kExitUsage;
        default:
            return kExitInternal;
    }
}

void check(ce_status status) {
    if (status == CE_OK) return;
    std::fprintf(stderr, "error: %s: %s\n", ce_status_string(status), ce_last_error());
    throw Exit{exit_code_for(status)};
}

struct Options {
    std::string instance_path;
    std::string tour_path;
    std::string algo = "ce";
    std::string metric = "real";
    std::uint64_t budget = 1'000'000;
    std::uint32_t r = 3;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t parallelism = 1;
    std::uint64_t stuck_threshold = 0;
    std::uint32_t post_catch_descent = 1;
    bool chaser_noop = false;
    std::string out_csv;
    std::string out_svg;
    std::string out_tour;
};

ce_config make_config(const Options& o) {
    ce_config c;
    ce_config_default(&c);
    c.budget = o.budget;
    c.r = o.r;
    c.seed = o.seed;
    c.metric = o.metric == "rounded" ? CE_METRIC_ROUNDED : CE_METRIC_REAL;
    c.post_catch_descent = o.post_catch_descent;
    c.chaser_noop_allowed = o.chaser_noop ? 1 : 0;
    c.stuck_threshold = o.stuck_threshold;
    return c;
}

ce_metric metric_of(const Options& o) { return o.metric == "rounded" ? CE_METRIC_ROUNDED : CE_METRIC_REAL; }

InstancePtr load_instance(const std::string& path) {
    ce_instance* raw = nullptr;
    check(ce_instance_load(path.c_str(), &raw));
    return InstancePtr(raw);
}

void add_run_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--budget", o.budget, "Cost evaluations per run")->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
    cmd->add_option("--r", o.r, "Cities permuted on a catch or restart")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Run seed (benchmarks: first trial seed)");
    cmd->add_option("--metric", o.metric, "Edge metric")->check(CLI::IsMember({"real", "rounded"}));
    cmd->add_option("--stuck-threshold", o.stuck_threshold,
                    "simple: consecutive rejections before perturbing (0 = N(N-1)/2)");
    cmd->add_option("--post-catch-descent", o.post_catch_descent,
                    "ce: descent attempts granted to the perturbed state after a catch");
    cmd->add_flag("--chaser-noop", o.chaser_noop, "ce: chaser may pick already aligned cities");
}

int cmd_solve(const Options& o) {
    auto instance = load_instance(o.instance_path);
    const ce_config config = make_config(o);
    const ce_algorithm algo = o.algo == "simple" ? CE_ALGO_SIMPLE : CE_ALGO_CHASE_ESCAPE;

    ce_trial* raw = nullptr;
    check(ce_solve(instance.get(), algo, &config, &raw));
    TrialPtr trial(raw);

    std::printf("algorithm=%s instance=%s seed=%" PRIu64 " budget=%" PRIu64 " r=%u metric=%s best_cost=%.6f "
                "evaluations=%" PRIu64 " catches=%" PRIu64 " time=%.3fs\n",
                algo == CE_ALGO_SIMPLE ? "simple" : "chase_escape", ce_instance_name(instance.get()),
                ce_trial_seed(trial.get()), o.budget, o.r, o.metric.c_str(), ce_trial_best_cost(trial.get()),
                ce_trial_evaluations(trial.get()), ce_trial_catches(trial.get()), ce_trial_wall_time(trial.get()));

    if (!o.out_csv.empty()) check(ce_trial_write_csv(trial.get(), o.out_csv.c_str()));
    if (!o.out_tour.empty() || !o.out_svg.empty()) {
        ce_tour* tour_raw = nullptr;
        check(ce_trial_best_tour(trial.get(), &tour_raw));
        TourPtr tour(tour_raw);
        if (!o.out_tour.empty()) check(ce_tour_save(tour.get(), ce_instance_name(instance.get()), o.out_tour.c_str()));
        if (!o.out_svg.empty()) check(ce_render_svg(instance.get(), tour.get(), metric_of(o), o.out_svg.c_str()));
    }
    return kExitOk;
}

int cmd_bench(const Options& o) {
    auto instance = load_instance(o.instance_path);
    const ce_config config = make_config(o);

    ce_bench* simple_raw = nullptr;
    check(ce_bench_run(instance.get(), CE_ALGO_SIMPLE, &config, o.trials, o.parallelism, &simple_raw));
    BenchPtr simple(simple_raw);
    ce_bench* ce_raw = nullptr;
    check(ce_bench_run(instance.get(), CE_ALGO_CHASE_ESCAPE, &config, o.trials, o.parallelism, &ce_raw));
    BenchPtr chase(ce_raw);

    size_t needed = 0;
    check(ce_compare_format(simple.get(), chase.get(), nullptr, 0, &needed));
    std::vector<char> text(needed);
    check(ce_compare_format(simple.get(), chase.get(), text.data(), text.size(), &needed));
    std::fputs(text.data(), stdout);

    const ce_bench* rows[] = {simple.get(), chase.get()};
    check(ce_results_write_csv(rows, 2, o.out_csv.c_str()));
    std::printf("wrote %zu trial rows to %s\n", 2 * o.trials, o.out_csv.c_str());
    return kExitOk;
}

int cmd_render(const Options& o) {
    auto instance = load_instance(o.instance_path);
    ce_tour* raw = nullptr;
    check(ce_tour_load(o.tour_path.c_str(), ce_instance_size(instance.get()), &raw));
    TourPtr tour(raw);
    check(ce_render_svg(instance.get(), tour.get(), metric_of(o), o.out_svg.c_str()));
    double cost = 0.0;
    check(ce_tour_cost(instance.get(), tour.get(), metric_of(o), &cost));
    std::printf("wrote %s (cost %.6f)\n", o.out_svg.c_str(), cost);
    return kExitOk;
}

int cmd_oracle(const Options& o) {
    auto instance = load_instance(o.instance_path);
    double cost = 0.0;
    ce_tour* raw = nullptr;
    check(ce_oracle(instance.get(), metric_of(o), &cost, &raw));
    TourPtr tour(raw);
    std::vector<int32_t> order(ce_tour_size(tour.get()));
    check(ce_tour_copy(tour.get(), order.data(), order.size()));
    std::printf("optimal_cost=%.6f tour=", cost);
    for (std::size_t i = 0; i < order.size(); ++i) std::printf(i ? " %d" : "%d", order[i]);
    std::printf("\n");
    if (!o.out_tour.empty()) check(ce_tour_save(tour.get(), ce_instance_name(instance.get()), o.out_tour.c_str()));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chase-and-escape TSP solver"};
    app.require_subcommand(1);
    Options o;

    auto* solve = app.add_subcommand("solve", "Run one trial");
    solve->add_option("instance", o.instance_path, "TSPLIB .tsp file")->required();
    solve->add_option("--algo", o.algo, "Algorithm")->check(CLI::IsMember({"ce", "simple"}));
    add_run_flags(solve, o);
    solve->add_option("--out-csv", o.out_csv, "Write the trial row as CSV");
    solve->add_option("--out-tour", o.out_tour, "Write the best tour as a TSPLIB .tour file");
    solve->add_option("--out-svg", o.out_svg, "Plot the best tour as SVG");

    auto* bench = app.add_subcommand("bench", "Repeated trials of both algorithms");
    bench->add_option("instance", o.instance_path, "TSPLIB .tsp file")->required();
    add_run_flags(bench, o);
    bench->add_option("--trials", o.trials, "Trials per algorithm")->check(CLI::PositiveNumber);
    bench->add_option("--parallelism", o.parallelism, "Concurrent trials")->check(CLI::PositiveNumber);
    o.out_csv = "results.csv";
    bench->add_option("--out-csv", o.out_csv, "Per-trial CSV path")->capture_default_str();

    auto* render = app.add_subcommand("render", "Plot a tour as SVG");
    render->add_option("instance", o.instance_path, "TSPLIB .tsp file")->required();
    render->add_option("tour", o.tour_path, "TSPLIB .tour file")->required();
    render->add_option("out", o.out_svg, "Output .svg path")->required();
    render->add_option("--metric", o.metric, "Edge metric for the title")->check(CLI::IsMember({"real", "rounded"}));

    auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum for N <= 11");
    oracle->add_option("instance", o.instance_path, "TSPLIB .tsp file")->required();
    oracle->add_option("--metric", o.metric, "Edge metric")->check(CLI::IsMember({"real", "rounded"}));
    oracle->add_option("--out-tour", o.out_tour, "Write the optimal tour");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*solve) return cmd_solve(o);
        if (*bench) return cmd_bench(o);
        if (*render) return cmd_render(o);
        if (*oracle) return cmd_oracle(o);
    } catch (const Exit& e) {
        return e.code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitInternal;
    }
    return kExitUsage;
}
