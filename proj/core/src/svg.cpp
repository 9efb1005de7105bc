#include "ramanujan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace ramanujan::svg {

namespace {

const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string render(const std::string& title, const std::vector<Series>& series,
                   int width, int height, bool log_x) {
    const double ml = 60, mr = 20, mt = 36, mb = 40;  // margins
    const double pw = width - ml - mr, ph = height - mt - mb;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            const double xv = log_x ? std::log10(x) : x;
            xmin = std::min(xmin, xv);
            xmax = std::max(xmax, xv);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (!(xmin < xmax)) { xmin -= 1; xmax += 1; }
    if (!(ymin < ymax)) { ymin -= 1; ymax += 1; }

    auto px = [&](double x) {
        const double xv = log_x ? std::log10(x) : x;
        return ml + (xv - xmin) / (xmax - xmin) * pw;
    };
    auto py = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
        << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";

    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw
        << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
        << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n";
    // zero line when the range crosses it
    if (ymin < 0.0 && ymax > 0.0) {
        out << "<line x1=\"" << ml << "\" y1=\"" << py(0) << "\" x2=\"" << ml + pw
            << "\" y2=\"" << py(0) << "\" stroke=\"#cccccc\" stroke-dasharray=\"4 3\"/>\n";
    }
    // extreme tick labels
    auto xlabel = [&](double v) { return log_x ? ("1e" + num(v)) : num(v); };
    out << "<text x=\"" << ml << "\" y=\"" << height - 8
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << xlabel(xmin) << "</text>\n";
    out << "<text x=\"" << ml + pw << "\" y=\"" << height - 8
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << xlabel(xmax) << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << mt + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << num(ymax) << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << mt + ph
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << num(ymin) << "</text>\n";

    int color = 0;
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << palette[color % 8]
            << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : s.points)
            out << num(px(x)) << ',' << num(py(y)) << ' ';
        out << "\"/>\n";
        out << "<text x=\"" << width - mr << "\" y=\"" << mt + 14 * (color + 1)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\""
            << palette[color % 8] << "\">" << s.name << "</text>\n";
        ++color;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace ramanujan::svg
