#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chase/error.hpp"

namespace chase {

/// Random stream used by every stochastic operator. Each run owns one.
using Rng = std::mt19937_64;

using CityIndex = int;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// A named set of N >= 3 cities in the plane.
struct Instance {
    std::string name;
    std::vector<Point> coords;

    std::size_t size() const noexcept { return coords.size(); }

    /// Throws Error(Domain) if N < 3 or a coordinate is not finite.
    void validate() const;
};

/// A candidate solution: a permutation of the city indices 0..N-1, read as a
/// closed cycle.
struct Tour {
    std::vector<CityIndex> order;

    std::size_t size() const noexcept { return order.size(); }
    friend bool operator==(const Tour&, const Tour&) = default;
};

enum class MetricMode {
    RealEuclidean,     // exact edge lengths
    RoundedEuclidean,  // each edge rounded to the nearest integer (TSPLIB EUC_2D)
};

const char* to_string(MetricMode mode) noexcept;  // "real" / "rounded"
MetricMode parse_metric(const std::string& label);

/// Throws Error(Validation) naming the first duplicated or missing index.
void validate_tour(std::span<const CityIndex> order, std::size_t n);
bool is_permutation_of(std::span<const CityIndex> order, std::size_t n) noexcept;

double edge_length(const Point& a, const Point& b, MetricMode mode) noexcept;

/// Closed-cycle length of `tour`, including the edge from the last city back
/// to the first. Validates the tour.
double tour_cost(const Instance& instance, const Tour& tour, MetricMode mode);

/// Uniform permutation of 0..n-1. Throws Error(Domain) for n < 3.
Tour random_tour(std::size_t n, Rng& rng);

inline constexpr std::size_t kMaxBruteForceCities = 11;

/// Exhaustive optimum with city 0 fixed at the first position. Ties resolve to
/// the lexicographically smallest order. Throws Error(Size) above 11 cities.
std::pair<Tour, double> brute_force_optimum(const Instance& instance, MetricMode mode);

/// Tour cost evaluation as seen by the search algorithms. Every call is one
/// unit of evaluation budget.
class CostFunction {
public:
    virtual ~CostFunction() = default;
    virtual double operator()(std::span<const CityIndex> order) const = 0;
    virtual std::size_t size() const noexcept = 0;
};

/// Full recomputation over a precomputed edge-length table. Produces the same
/// sums as tour_cost() without re-validating the permutation.
class MatrixCost final : public CostFunction {
public:
    MatrixCost(const Instance& instance, MetricMode mode);

    double operator()(std::span<const CityIndex> order) const override;
    std::size_t size() const noexcept override { return n_; }
    MetricMode mode() const noexcept { return mode_; }

private:
    std::size_t n_;
    MetricMode mode_;
    std::vector<double> lengths_;  // row-major n x n
};

}  // namespace chase
