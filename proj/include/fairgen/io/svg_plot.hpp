// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace fairgen {

// Self-contained scatter plot with an optional fitted curve, for the
// benchmark's time-vs-N figure. Log-scale y when requested.
struct SvgSeries {
    std::string label;
    std::string color = "#1f77b4";
    bool line = false;
    std::vector<std::pair<double, double>> points;
};

void write_svg_plot(const std::filesystem::path& file, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<SvgSeries>& series, bool log_y = false);

}  // namespace fairgen
