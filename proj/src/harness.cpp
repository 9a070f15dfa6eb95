#include "chase/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "chase/baseline.hpp"
#include "chase/engine.hpp"

namespace chase {

const char* label(Algorithm algorithm) noexcept {
    return algorithm == Algorithm::ChaseEscape ? kChaseEscapeLabel : kSimpleLabel;
}

Algorithm parse_algorithm(const std::string& text) {
    if (text == "ce" || text == kChaseEscapeLabel) return Algorithm::ChaseEscape;
    if (text == kSimpleLabel) return Algorithm::Simple;
    throw Error(ErrorKind::Config, "unknown algorithm '" + text + "' (expected ce or simple)");
}

TrialStats run_trial(const Instance& instance, Algorithm algorithm, const BenchConfig& config,
                     std::uint64_t seed) {
    if (algorithm == Algorithm::ChaseEscape) {
        RunConfig rc;
        rc.budget = config.budget;
        rc.r = config.r;
        rc.seed = seed;
        rc.metric = config.metric;
        rc.post_catch_descent = config.post_catch_descent;
        rc.chaser_noop_allowed = config.chaser_noop_allowed;
        return run_chase_escape(instance, rc);
    }
    SimpleConfig sc;
    sc.budget = config.budget;
    sc.r = config.r;
    sc.seed = seed;
    sc.metric = config.metric;
    sc.stuck_threshold = config.stuck_threshold;
    return run_simple(instance, sc);
}

BenchStats aggregate(std::string algorithm, std::string instance, std::uint64_t budget, MetricMode metric,
                     std::vector<TrialStats> per_trial) {
    BenchStats stats;
    stats.algorithm = std::move(algorithm);
    stats.instance = std::move(instance);
    stats.budget = budget;
    stats.metric = metric;
    stats.trials = per_trial.size();
    if (!per_trial.empty()) {
        const double n = static_cast<double>(per_trial.size());
        double sum = 0.0;
        double time = 0.0;
        for (const auto& t : per_trial) {
            sum += t.best_cost;
            time += t.wall_time_seconds;
        }
        stats.mean_best = sum / n;
        stats.mean_time_seconds = time / n;
        double sq = 0.0;
        for (const auto& t : per_trial) sq += (t.best_cost - stats.mean_best) * (t.best_cost - stats.mean_best);
        stats.sdv_best = std::sqrt(sq / n);
    }
    stats.per_trial = std::move(per_trial);
    return stats;
}

BenchStats run_benchmark(const Instance& instance, Algorithm algorithm, const BenchConfig& config,
                         std::size_t trials, std::size_t parallelism) {
    if (trials == 0) throw Error(ErrorKind::Config, "trials must be at least 1");
    instance.validate();

    std::vector<TrialStats> results(trials);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < trials;) {
            try {
                results[i] = run_trial(instance, algorithm, config, config.seed_base + i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = trials;
            }
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(parallelism, 1, trials);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    return aggregate(label(algorithm), instance.name, config.budget, config.metric, std::move(results));
}

Comparison compare(const BenchStats& a, const BenchStats& b) {
    if (a.instance != b.instance || a.budget != b.budget || a.metric != b.metric) {
        throw Error(ErrorKind::Config, "cannot compare benchmarks run on different instances, budgets or metrics");
    }
    Comparison out{a, b, a.mean_best - b.mean_best, 0.0, 0.0};

    // Sample variances recovered from the population SDVs.
    auto sample_var = [](const BenchStats& s) {
        if (s.trials < 2) return 0.0;
        const double n = static_cast<double>(s.trials);
        return s.sdv_best * s.sdv_best * n / (n - 1.0);
    };
    const double qa = a.trials ? sample_var(a) / static_cast<double>(a.trials) : 0.0;
    const double qb = b.trials ? sample_var(b) / static_cast<double>(b.trials) : 0.0;
    const double se = std::sqrt(qa + qb);
    if (se > 0.0) {
        out.welch_t = out.mean_difference / se;
        double denom = 0.0;
        if (a.trials > 1) denom += qa * qa / static_cast<double>(a.trials - 1);
        if (b.trials > 1) denom += qb * qb / static_cast<double>(b.trials - 1);
        out.welch_df = denom > 0.0 ? (qa + qb) * (qa + qb) / denom : 0.0;
    } else if (out.mean_difference != 0.0) {
        out.welch_t = std::copysign(std::numeric_limits<double>::infinity(), out.mean_difference);
    }
    return out;
}

std::string format_comparison(const Comparison& c) {
    std::string text;
    char line[256];
    std::snprintf(line, sizeof line, "instance %s, budget %llu evaluations, metric %s, SDV = population std. dev.\n",
                  c.a.instance.c_str(), static_cast<unsigned long long>(c.a.budget), to_string(c.a.metric));
    text += line;
    std::snprintf(line, sizeof line, "%-14s %12s %12s %10s %7s\n", "", "Time(sec)", "Ave. Path", "SDV", "trials");
    text += line;
    for (const BenchStats* s : {&c.a, &c.b}) {
        std::snprintf(line, sizeof line, "%-14s %12.3f %12.3f %10.3f %7zu\n", s->algorithm.c_str(),
                      s->mean_time_seconds, s->mean_best, s->sdv_best, s->trials);
        text += line;
    }
    const char* favored = c.mean_difference > 0 ? c.b.algorithm.c_str()
                          : c.mean_difference < 0 ? c.a.algorithm.c_str()
                                                  : "neither";
    std::snprintf(line, sizeof line, "mean difference (%s - %s): %.3f in favor of %s\n", c.a.algorithm.c_str(),
                  c.b.algorithm.c_str(), c.mean_difference, favored);
    text += line;
    std::snprintf(line, sizeof line, "Welch t: %.4f (df %.1f, descriptive)\n", c.welch_t, c.welch_df);
    text += line;
    return text;
}

}  // namespace chase
