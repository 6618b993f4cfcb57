// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/io/svg_plot.hpp"

#include "fairgen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

namespace fairgen {

void write_svg_plot(const std::filesystem::path& file, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<SvgSeries>& series, bool log_y) {
    constexpr double w = 640, h = 420, ml = 70, mr = 20, mt = 40, mb = 50;

    double xmin = std::numeric_limits<double>::max(), xmax = std::numeric_limits<double>::lowest();
    double ymin = xmin, ymax = xmax;
    for (const auto& s : series) {
        for (auto [x, y] : s.points) {
            const double yy = log_y ? std::log10(std::max(y, 1e-12)) : y;
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, yy);
            ymax = std::max(ymax, yy);
        }
    }
    if (xmin > xmax) {
        xmin = 0;
        xmax = 1;
        ymin = 0;
        ymax = 1;
    }
    if (xmax - xmin < 1e-12) xmax = xmin + 1;
    if (ymax - ymin < 1e-12) ymax = ymin + 1;

    const auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
    const auto py = [&](double y) {
        const double yy = log_y ? std::log10(std::max(y, 1e-12)) : y;
        return h - mb - (yy - ymin) / (ymax - ymin) * (h - mt - mb);
    };

    std::ofstream out(file);
    if (!out) throw IngestionError("cannot write plot: " + file.string());
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n"
        << "<rect width='100%' height='100%' fill='white'/>\n"
        << "<text x='" << w / 2 << "' y='20' text-anchor='middle' font-size='15'>" << title
        << "</text>\n"
        << "<line x1='" << ml << "' y1='" << h - mb << "' x2='" << w - mr << "' y2='" << h - mb
        << "' stroke='black'/>\n"
        << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << h - mb
        << "' stroke='black'/>\n"
        << "<text x='" << w / 2 << "' y='" << h - 12 << "' text-anchor='middle' font-size='12'>"
        << x_label << "</text>\n"
        << "<text x='16' y='" << h / 2 << "' font-size='12' transform='rotate(-90 16 " << h / 2
        << ")' text-anchor='middle'>" << y_label << (log_y ? " (log scale)" : "") << "</text>\n";

    double legend_y = mt + 4;
    for (const auto& s : series) {
        if (s.line && s.points.size() > 1) {
            out << "<polyline fill='none' stroke='" << s.color << "' stroke-width='1.5' points='";
            for (auto [x, y] : s.points) out << px(x) << "," << py(y) << " ";
            out << "'/>\n";
        } else {
            for (auto [x, y] : s.points) {
                out << "<circle cx='" << px(x) << "' cy='" << py(y) << "' r='3.5' fill='"
                    << s.color << "'/>\n";
            }
        }
        out << "<text x='" << w - mr - 150 << "' y='" << legend_y << "' font-size='11' fill='"
            << s.color << "'>" << s.label << "</text>\n";
        legend_y += 14;
    }
    out << "</svg>\n";
}

}  // namespace fairgen
