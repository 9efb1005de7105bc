#pragma once

/**
 * @file svg.hpp
 * @brief Minimal polyline chart renderer: axes, one path per series, no
 *        plotting dependency.  CSV is the canonical output; SVG is a
 *        convenience view.
 */

#include <string>
#include <vector>

namespace ramanujan::svg {

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;  // (x, y)
};

/// Renders the series into a self-contained <svg> document.
/// log_x draws the abscissa on a log10 scale (requires x > 0).
std::string render(const std::string& title, const std::vector<Series>& series,
                   int width = 720, int height = 480, bool log_x = false);

}  // namespace ramanujan::svg
