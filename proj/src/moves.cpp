#include "chase/moves.hpp"

#include <algorithm>
#include <numeric>

namespace chase {
namespace {

std::size_t uniform_below(std::size_t bound, Rng& rng) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

}  // namespace

Tour two_exchange(const Tour& tour, std::size_t i, std::size_t j) {
    const std::size_t n = tour.size();
    if (i >= n || j >= n || i == j) {
        throw Error(ErrorKind::Domain, "two_exchange needs distinct positions below " + std::to_string(n) +
                                           ", got " + std::to_string(i) + " and " + std::to_string(j));
    }
    Tour out = tour;
    std::swap(out.order[i], out.order[j]);
    return out;
}

std::size_t hamming(const Tour& a, const Tour& b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::Domain, "hamming on tours of different lengths");
    }
    std::size_t d = 0;
    for (std::size_t p = 0; p < a.size(); ++p) d += a.order[p] != b.order[p];
    return d;
}

MoveOutcome evader_step(const CostFunction& cost, const Tour& tour, double tour_cost, Rng& rng) {
    const std::size_t n = tour.size();
    const std::size_t i = uniform_below(n, rng);
    std::size_t j = uniform_below(n - 1, rng);
    if (j >= i) ++j;

    MoveOutcome out{two_exchange(tour, i, j), 0.0, false, 1};
    out.cost = cost(out.tour.order);
    if (out.cost < tour_cost) {
        out.accepted = true;
    } else {
        out.tour = tour;
        out.cost = tour_cost;
    }
    return out;
}

MoveOutcome chaser_step(const CostFunction& cost, const Tour& chaser, const Tour& evader, Rng& rng,
                        bool allow_noop) {
    const std::size_t n = chaser.size();
    if (evader.size() != n) throw Error(ErrorKind::Domain, "chaser and evader differ in length");

    // Positions holding a city other than the evader's at that position. The
    // city chaser.order[p] for such p is exactly a misplaced city.
    std::vector<std::size_t> misplaced;
    for (std::size_t p = 0; p < n; ++p) {
        if (chaser.order[p] != evader.order[p]) misplaced.push_back(p);
    }
    if (misplaced.empty()) throw Error(ErrorKind::Caught, "chaser has caught the evader");

    const std::size_t from = allow_noop ? uniform_below(n, rng) : misplaced[uniform_below(misplaced.size(), rng)];
    const CityIndex city = chaser.order[from];
    const auto to = static_cast<std::size_t>(
        std::find(evader.order.begin(), evader.order.end(), city) - evader.order.begin());

    MoveOutcome out{from == to ? chaser : two_exchange(chaser, from, to), 0.0, true, 1};
    out.cost = cost(out.tour.order);
    return out;
}

Tour perturb_r(const Tour& tour, std::size_t r, Rng& rng) {
    const std::size_t n = tour.size();
    if (r < 3 || r > n) {
        throw Error(ErrorKind::Domain, "perturb_r needs 3 <= r <= " + std::to_string(n) + ", got " +
                                           std::to_string(r));
    }
    // Partial Fisher-Yates: the first r entries become a uniform r-subset.
    std::vector<std::size_t> positions(n);
    std::iota(positions.begin(), positions.end(), 0);
    for (std::size_t k = 0; k < r; ++k) {
        std::swap(positions[k], positions[k + uniform_below(n - k, rng)]);
    }
    positions.resize(r);

    std::vector<std::size_t> source(r);
    std::iota(source.begin(), source.end(), 0);
    const auto identity = source;
    do {
        std::shuffle(source.begin(), source.end(), rng);
    } while (source == identity);

    Tour out = tour;
    for (std::size_t k = 0; k < r; ++k) {
        out.order[positions[k]] = tour.order[positions[source[k]]];
    }
    return out;
}

}  // namespace chase
