#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>

#include "chase/svg.hpp"
#include "chase/tsplib.hpp"
#include "test_support.hpp"

using namespace chase;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("berlin52 optimal tour plot") {
    const auto inst = tsplib::load_tsp(chase::testing::data_path("berlin52.tsp"));
    const auto opt = tsplib::load_tour(chase::testing::data_path("berlin52.opt.tour"), 52);
    const auto svg = render_svg(inst, opt, MetricMode::RealEuclidean);
    CHECK(count(svg, "<circle") == 52);
    CHECK(count(svg, "<path") == 1);
    CHECK(svg.find(" Z\"") != std::string::npos);
    CHECK(svg.find("berlin52 cost 7544.37") != std::string::npos);
    CHECK(svg.find("y axis flipped") != std::string::npos);
    CHECK(svg == render_svg(inst, opt, MetricMode::RealEuclidean));
}

TEST_CASE("points stay inside the 800 x 800 viewport, aspect preserved") {
    const Instance tri{"tri3", {{0, 0}, {4, 0}, {0, 3}}};
    const auto svg = render_svg(tri, Tour{{0, 1, 2}}, MetricMode::RealEuclidean);
    CHECK(count(svg, "<circle") == 3);
    CHECK(svg.find("width=\"800.00\"") != std::string::npos);

    std::regex circle(R"re(cx="([0-9.]+)" cy="([0-9.]+)")re");
    std::vector<std::pair<double, double>> pts;
    for (std::sregex_iterator it(svg.begin(), svg.end(), circle), end; it != end; ++it) {
        pts.emplace_back(std::stod((*it)[1]), std::stod((*it)[2]));
    }
    REQUIRE(pts.size() == 3);
    for (auto [x, y] : pts) {
        CHECK(x >= 0.0);
        CHECK(x <= 800.0);
        CHECK(y >= 0.0);
        CHECK(y <= 800.0);
    }
    // (4,0) to the right of (0,0); (0,3) drawn above (0,0).
    CHECK(pts[1].first > pts[0].first);
    CHECK(pts[2].second < pts[0].second);
    const double sx = (pts[1].first - pts[0].first) / 4.0;
    const double sy = (pts[0].second - pts[2].second) / 3.0;
    CHECK(sx == doctest::Approx(sy).epsilon(1e-3));
}

TEST_CASE("degenerate and escaped input") {
    const Instance line{"a<b&c", {{0, 0}, {1, 0}, {2, 0}}};
    const auto svg = render_svg(line, Tour{{0, 1, 2}}, MetricMode::RealEuclidean);
    CHECK(svg.find("a&lt;b&amp;c") != std::string::npos);
    CHECK(svg.find("nan") == std::string::npos);
    CHECK(svg.find("inf") == std::string::npos);
    CHECK_THROWS_AS(render_svg(line, Tour{{0, 1}}, MetricMode::RealEuclidean), Error);
}
