#pragma once

#include <string>

#include "chase/core.hpp"

namespace chase {

inline constexpr double kSvgViewport = 800.0;

/// Tour plot: cities as filled circles, the tour as one closed path, and a
/// title with the instance name and cost. Output is a pure function of its
/// inputs.
std::string render_svg(const Instance& instance, const Tour& tour, MetricMode mode);

}  // namespace chase
