#include "chase/tsplib.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cctype>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace chase::tsplib {
namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string f; in >> f;) out.push_back(f);
    return out;
}

// "KEY: value", "KEY : value" or a bare "KEY".
std::pair<std::string, std::string> split_keyword(const std::string& line) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) return {upper(trim(line)), {}};
    return {upper(trim(line.substr(0, colon))), trim(line.substr(colon + 1))};
}

std::optional<long long> to_integer(const std::string& s) {
    long long v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return v;
}

std::optional<double> to_real(const std::string& s) {
    // strtod accepts the exponent forms found in some TSPLIB files (e.g. 1.2e+03).
    if (s.empty()) return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) return std::nullopt;
    return v;
}

std::string at_line(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

std::string shortest(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

}  // namespace

Instance parse_tsp(std::istream& in) {
    Header header;
    bool have_dimension = false;
    std::string line;
    std::size_t line_no = 0;
    bool in_coords = false;

    while (!in_coords && std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto [key, value] = split_keyword(line);
        if (key == "NODE_COORD_SECTION") {
            in_coords = true;
        } else if (key == "NAME") {
            header.name = value;
        } else if (key == "TYPE") {
            header.type = value;
        } else if (key == "DIMENSION") {
            const auto d = to_integer(value);
            if (!d || *d <= 0) throw Error(ErrorKind::Parse, at_line(line_no) + "bad DIMENSION '" + value + "'");
            header.dimension = static_cast<std::size_t>(*d);
            have_dimension = true;
        } else if (key == "EDGE_WEIGHT_TYPE") {
            header.edge_weight_type = upper(value);
        } else if (key == "EOF") {
            break;
        } else if (key.ends_with("_SECTION")) {
            throw Error(ErrorKind::UnsupportedFormat, at_line(line_no) + "unsupported section " + key);
        }
        // COMMENT, CAPACITY and other keywords are ignored.
    }

    if (header.edge_weight_type.empty()) {
        throw Error(ErrorKind::UnsupportedFormat, "missing EDGE_WEIGHT_TYPE (only EUC_2D is supported)");
    }
    if (header.edge_weight_type != "EUC_2D") {
        throw Error(ErrorKind::UnsupportedFormat,
                    "EDGE_WEIGHT_TYPE " + header.edge_weight_type + " not supported (only EUC_2D)");
    }
    if (!in_coords) throw Error(ErrorKind::Parse, "missing NODE_COORD_SECTION");
    if (!have_dimension) throw Error(ErrorKind::Parse, "missing DIMENSION");

    std::vector<std::optional<Point>> nodes(header.dimension);
    std::size_t parsed = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (upper(fields[0]) == "EOF") break;
        if (fields.size() != 3) {
            throw Error(ErrorKind::Parse, at_line(line_no) + "expected 'id x y', got '" + trim(line) + "'");
        }
        const auto id = to_integer(fields[0]);
        const auto x = to_real(fields[1]);
        const auto y = to_real(fields[2]);
        if (!id || !x || !y) {
            throw Error(ErrorKind::Parse, at_line(line_no) + "malformed coordinate line '" + trim(line) + "'");
        }
        ++parsed;
        if (*id < 1 || static_cast<std::size_t>(*id) > header.dimension) {
            throw Error(ErrorKind::Integrity, at_line(line_no) + "node id " + fields[0] +
                                                  " outside 1.." + std::to_string(header.dimension));
        }
        auto& slot = nodes[static_cast<std::size_t>(*id - 1)];
        if (slot) throw Error(ErrorKind::Integrity, at_line(line_no) + "node id " + fields[0] + " repeated");
        slot = Point{*x, *y};
    }
    if (parsed != header.dimension) {
        throw Error(ErrorKind::Integrity, "DIMENSION is " + std::to_string(header.dimension) + " but " +
                                              std::to_string(parsed) + " coordinate lines were read");
    }

    Instance instance;
    instance.name = header.name;
    instance.coords.reserve(nodes.size());
    for (const auto& p : nodes) instance.coords.push_back(*p);
    instance.validate();
    return instance;
}

Instance load_tsp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
    return parse_tsp(in);
}

Tour parse_opt_tour(std::istream& in, std::size_t n) {
    std::string line;
    std::size_t line_no = 0;
    bool in_section = false;
    while (!in_section && std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto [key, value] = split_keyword(line);
        if (key == "TOUR_SECTION") {
            in_section = true;
        } else if (key == "DIMENSION") {
            const auto d = to_integer(value);
            if (!d) throw Error(ErrorKind::Parse, at_line(line_no) + "bad DIMENSION '" + value + "'");
            if (static_cast<std::size_t>(*d) != n) {
                throw Error(ErrorKind::Integrity, "tour DIMENSION " + value + " does not match instance size " +
                                                      std::to_string(n));
            }
        }
    }
    if (!in_section) throw Error(ErrorKind::Parse, "missing TOUR_SECTION");

    Tour tour;
    std::vector<bool> seen(n, false);
    bool terminated = false;
    while (!terminated && std::getline(in, line)) {
        ++line_no;
        for (const auto& field : split_fields(line)) {
            if (upper(field) == "EOF") {
                terminated = true;
                break;
            }
            const auto id = to_integer(field);
            if (!id) throw Error(ErrorKind::Parse, at_line(line_no) + "bad node id '" + field + "'");
            if (*id == -1) {
                terminated = true;
                break;
            }
            if (*id < 1 || static_cast<std::size_t>(*id) > n) {
                throw Error(ErrorKind::Validation, at_line(line_no) + "node id " + field + " outside 1.." +
                                                       std::to_string(n));
            }
            const auto city = static_cast<CityIndex>(*id - 1);
            if (seen[city]) throw Error(ErrorKind::Validation, at_line(line_no) + "node id " + field + " repeated");
            seen[city] = true;
            tour.order.push_back(city);
        }
    }
    if (tour.size() != n) {
        throw Error(ErrorKind::Integrity, "tour lists " + std::to_string(tour.size()) + " nodes, expected " +
                                              std::to_string(n));
    }
    return tour;
}

Tour load_tour(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
    return parse_opt_tour(in, n);
}

void write_tour(std::ostream& out, const Tour& tour, const std::string& name) {
    out << "NAME : " << name << "\n"
        << "TYPE : TOUR\n"
        << "DIMENSION : " << tour.size() << "\n"
        << "TOUR_SECTION\n";
    for (CityIndex c : tour.order) out << (c + 1) << "\n";
    out << "-1\nEOF\n";
    if (!out) throw Error(ErrorKind::Io, "failed writing tour");
}

void write_results_csv(std::span<const TrialStats> rows, std::ostream& out) {
    if (rows.empty()) throw Error(ErrorKind::Domain, "write_results_csv needs at least one row");
    out << kCsvHeader << "\n";
    for (const auto& row : rows) {
        out << row.algorithm << ',' << row.instance << ',' << row.seed << ',' << row.budget << ',' << row.r
            << ',' << to_string(row.metric) << ',' << shortest(row.best_cost) << ',' << row.evaluations << ','
            << shortest(row.wall_time_seconds) << "\n";
    }
    out.flush();
    if (!out) throw Error(ErrorKind::Io, "failed writing results CSV");
}

}  // namespace chase::tsplib
