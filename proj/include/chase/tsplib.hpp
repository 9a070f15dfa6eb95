#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "chase/core.hpp"
#include "chase/trial.hpp"

namespace chase::tsplib {

struct Header {
    std::string name;
    std::string type;
    std::size_t dimension = 0;
    std::string edge_weight_type;
};

/// Reads a TSPLIB EUC_2D instance. Node k of the file lands at coords[k-1].
Instance parse_tsp(std::istream& in);
Instance load_tsp(const std::string& path);

/// Reads a TSPLIB TOUR_SECTION (1-based ids terminated by -1) into a 0-based
/// tour over n cities.
Tour parse_opt_tour(std::istream& in, std::size_t n);
Tour load_tour(const std::string& path, std::size_t n);

/// Writes `tour` as a TSPLIB .tour file (1-based ids, -1 terminator, EOF).
void write_tour(std::ostream& out, const Tour& tour, const std::string& name);

inline constexpr const char* kCsvHeader =
    "algorithm,instance,seed,budget,R,metric,best_cost,evaluations,wall_time_seconds";

/// Header line plus one row per trial, in input order. Reals use the shortest
/// representation that round-trips.
void write_results_csv(std::span<const TrialStats> rows, std::ostream& out);

}  // namespace chase::tsplib
