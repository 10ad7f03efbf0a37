#pragma once

#include <array>
#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace qaoaws {

struct PlotSeries {
    std::string name;
    std::string color; // e.g. "#1f77b4"
    std::vector<std::array<double, 2>> points;
};

/// Self-contained log-log line plot: axes, decade tick marks, one polyline
/// with point markers per series, and a legend. No external references.
/// Points with non-positive or non-finite coordinates are skipped.
void write_loglog_plot(std::ostream& out,
                       const std::string& title,
                       const std::string& x_label,
                       const std::string& y_label,
                       std::span<const PlotSeries> series);

void write_loglog_plot_file(const std::filesystem::path& path,
                            const std::string& title,
                            const std::string& x_label,
                            const std::string& y_label,
                            std::span<const PlotSeries> series);

} // namespace qaoaws
