#include "chase/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace chase {
namespace {

constexpr double kMargin = 40.0;
constexpr double kTitleBand = 30.0;

std::string fixed2(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const Instance& instance, const Tour& tour, MetricMode mode) {
    const double cost = tour_cost(instance, tour, mode);

    double min_x = instance.coords[0].x, max_x = min_x;
    double min_y = instance.coords[0].y, max_y = min_y;
    for (const auto& p : instance.coords) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double span_x = max_x - min_x;
    const double span_y = max_y - min_y;
    const double avail_w = kSvgViewport - 2 * kMargin;
    const double avail_h = kSvgViewport - 2 * kMargin - kTitleBand;
    double scale = 1.0;
    if (span_x > 0 || span_y > 0) {
        scale = std::min(span_x > 0 ? avail_w / span_x : avail_w / span_y,
                         span_y > 0 ? avail_h / span_y : avail_h / span_x);
    }
    // Centre the drawing in the available box.
    const double off_x = kMargin + (avail_w - span_x * scale) / 2;
    const double off_y = kMargin + kTitleBand + (avail_h - span_y * scale) / 2;
    auto sx = [&](double x) { return off_x + (x - min_x) * scale; };
    auto sy = [&](double y) { return off_y + (max_y - y) * scale; };

    const std::string vp = fixed2(kSvgViewport);
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + vp + "\" height=\"" + vp +
           "\" viewBox=\"0 0 " + vp + " " + vp + "\">\n";
    svg += "<!-- y axis flipped: larger instance y is drawn higher on the page -->\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + fixed2(kSvgViewport / 2) +
           "\" y=\"28.00\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">" +
           escape(instance.name) + " cost " + fixed2(cost) + " (" + to_string(mode) + ")</text>\n";

    svg += "<path d=\"";
    for (std::size_t k = 0; k < tour.size(); ++k) {
        const auto& p = instance.coords[tour.order[k]];
        svg += (k == 0 ? "M " : " L ") + fixed2(sx(p.x)) + " " + fixed2(sy(p.y));
    }
    svg += " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    for (const auto& p : instance.coords) {
        svg += "<circle cx=\"" + fixed2(sx(p.x)) + "\" cy=\"" + fixed2(sy(p.y)) + "\" r=\"4\" fill=\"black\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace chase
