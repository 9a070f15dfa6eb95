#include "chase/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace chase {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Validation: return "validation error";
        case ErrorKind::Domain: return "domain error";
        case ErrorKind::Parse: return "parse error";
        case ErrorKind::Integrity: return "integrity error";
        case ErrorKind::UnsupportedFormat: return "unsupported format";
        case ErrorKind::Size: return "size error";
        case ErrorKind::Io: return "I/O error";
        case ErrorKind::Config: return "config error";
        case ErrorKind::Caught: return "caught";
        case ErrorKind::Contract: return "contract violation";
    }
    return "error";
}

void Instance::validate() const {
    if (coords.size() < 3) {
        throw Error(ErrorKind::Domain,
                    "instance needs at least 3 cities, got " + std::to_string(coords.size()));
    }
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!std::isfinite(coords[i].x) || !std::isfinite(coords[i].y)) {
            throw Error(ErrorKind::Domain, "city " + std::to_string(i) + " has a non-finite coordinate");
        }
    }
}

const char* to_string(MetricMode mode) noexcept {
    return mode == MetricMode::RealEuclidean ? "real" : "rounded";
}

MetricMode parse_metric(const std::string& label) {
    if (label == "real") return MetricMode::RealEuclidean;
    if (label == "rounded") return MetricMode::RoundedEuclidean;
    throw Error(ErrorKind::Config, "unknown metric '" + label + "' (expected real or rounded)");
}

bool is_permutation_of(std::span<const CityIndex> order, std::size_t n) noexcept {
    if (order.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (CityIndex c : order) {
        if (c < 0 || static_cast<std::size_t>(c) >= n || seen[c]) return false;
        seen[c] = true;
    }
    return true;
}

void validate_tour(std::span<const CityIndex> order, std::size_t n) {
    if (order.size() != n) {
        throw Error(ErrorKind::Validation, "tour has " + std::to_string(order.size()) +
                                               " entries, expected " + std::to_string(n));
    }
    std::vector<bool> seen(n, false);
    for (CityIndex c : order) {
        if (c < 0 || static_cast<std::size_t>(c) >= n) {
            throw Error(ErrorKind::Validation, "tour index " + std::to_string(c) + " out of range");
        }
        if (seen[c]) {
            throw Error(ErrorKind::Validation, "tour index " + std::to_string(c) + " is duplicated");
        }
        seen[c] = true;
    }
    // Unreachable with a correct length and no duplicates, kept for the message.
    for (std::size_t c = 0; c < n; ++c) {
        if (!seen[c]) {
            throw Error(ErrorKind::Validation, "tour index " + std::to_string(c) + " is missing");
        }
    }
}

double edge_length(const Point& a, const Point& b, MetricMode mode) noexcept {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double d = std::sqrt(dx * dx + dy * dy);
    // TSPLIB nint()
    return mode == MetricMode::RoundedEuclidean ? std::floor(d + 0.5) : d;
}

double tour_cost(const Instance& instance, const Tour& tour, MetricMode mode) {
    validate_tour(tour.order, instance.size());
    const auto& o = tour.order;
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < o.size(); ++k) {
        total += edge_length(instance.coords[o[k]], instance.coords[o[k + 1]], mode);
    }
    total += edge_length(instance.coords[o.back()], instance.coords[o.front()], mode);
    return total;
}

Tour random_tour(std::size_t n, Rng& rng) {
    if (n < 3) {
        throw Error(ErrorKind::Domain, "random_tour needs n >= 3, got " + std::to_string(n));
    }
    Tour t;
    t.order.resize(n);
    std::iota(t.order.begin(), t.order.end(), 0);
    std::shuffle(t.order.begin(), t.order.end(), rng);
    return t;
}

std::pair<Tour, double> brute_force_optimum(const Instance& instance, MetricMode mode) {
    const std::size_t n = instance.size();
    if (n > kMaxBruteForceCities) {
        throw Error(ErrorKind::Size, "brute force limited to " + std::to_string(kMaxBruteForceCities) +
                                         " cities, instance has " + std::to_string(n));
    }
    instance.validate();
    const MatrixCost cost(instance, mode);

    Tour current;
    current.order.resize(n);
    std::iota(current.order.begin(), current.order.end(), 0);
    Tour best = current;
    double best_cost = cost(current.order);
    // Lexicographic enumeration with strict '<' keeps the smallest order on ties.
    while (std::next_permutation(current.order.begin() + 1, current.order.end())) {
        const double c = cost(current.order);
        if (c < best_cost) {
            best_cost = c;
            best = current;
        }
    }
    return {std::move(best), best_cost};
}

MatrixCost::MatrixCost(const Instance& instance, MetricMode mode)
    : n_(instance.size()), mode_(mode), lengths_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            lengths_[i * n_ + j] = edge_length(instance.coords[i], instance.coords[j], mode);
        }
    }
}

double MatrixCost::operator()(std::span<const CityIndex> order) const {
    // Same summation order as tour_cost() so both routes agree bit for bit.
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        total += lengths_[static_cast<std::size_t>(order[k]) * n_ + order[k + 1]];
    }
    total += lengths_[static_cast<std::size_t>(order.back()) * n_ + order.front()];
    return total;
}

}  // namespace chase
