#include "qaoaws/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "qaoaws/csv.hpp" // format_double
#include "qaoaws/errors.hpp"

namespace qaoaws {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 55.0;

struct LogRange {
    double lo = 0.0; // log10
    double hi = 1.0;
};

std::string fmt(double v) {
    // two decimals are plenty for pixel coordinates
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape_text(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

bool plottable(double x, double y) {
    return std::isfinite(x) && std::isfinite(y) && x > 0.0 && y > 0.0;
}

} // namespace

void write_loglog_plot(std::ostream& out,
                       const std::string& title,
                       const std::string& x_label,
                       const std::string& y_label,
                       std::span<const PlotSeries> series) {
    LogRange xr{std::numeric_limits<double>::infinity(),
                -std::numeric_limits<double>::infinity()};
    LogRange yr = xr;
    for (const auto& s : series) {
        for (const auto& pt : s.points) {
            if (!plottable(pt[0], pt[1])) {
                continue;
            }
            xr.lo = std::min(xr.lo, std::log10(pt[0]));
            xr.hi = std::max(xr.hi, std::log10(pt[0]));
            yr.lo = std::min(yr.lo, std::log10(pt[1]));
            yr.hi = std::max(yr.hi, std::log10(pt[1]));
        }
    }
    if (!std::isfinite(xr.lo)) { // nothing plottable: keep a unit box
        xr = {0.0, 1.0};
        yr = {0.0, 1.0};
    }
    if (xr.hi - xr.lo < 1e-9) {
        xr.lo -= 0.5;
        xr.hi += 0.5;
    }
    if (yr.hi - yr.lo < 1e-9) {
        yr.lo -= 0.5;
        yr.hi += 0.5;
    }

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto sx = [&](double x) {
        return kMarginLeft + plot_w * (std::log10(x) - xr.lo) / (xr.hi - xr.lo);
    };
    auto sy = [&](double y) {
        return kMarginTop + plot_h * (yr.hi - std::log10(y)) / (yr.hi - yr.lo);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << escape_text(title) << "</text>\n";

    // axes
    const double x0 = kMarginLeft, x1 = kWidth - kMarginRight;
    const double y0 = kHeight - kMarginBottom, y1 = kMarginTop;
    out << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x1)
        << "\" y2=\"" << fmt(y0) << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x0)
        << "\" y2=\"" << fmt(y1) << "\" stroke=\"black\"/>\n";

    // decade ticks
    for (int d = static_cast<int>(std::ceil(xr.lo - 1e-9));
         d <= static_cast<int>(std::floor(xr.hi + 1e-9)); ++d) {
        const double px = kMarginLeft + plot_w * (d - xr.lo) / (xr.hi - xr.lo);
        out << "<line x1=\"" << fmt(px) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(px)
            << "\" y2=\"" << fmt(y0 + 5) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << fmt(px) << "\" y=\"" << fmt(y0 + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">1e" << d
            << "</text>\n";
    }
    for (int d = static_cast<int>(std::ceil(yr.lo - 1e-9));
         d <= static_cast<int>(std::floor(yr.hi + 1e-9)); ++d) {
        const double py = kMarginTop + plot_h * (yr.hi - d) / (yr.hi - yr.lo);
        out << "<line x1=\"" << fmt(x0 - 5) << "\" y1=\"" << fmt(py) << "\" x2=\"" << fmt(x0)
            << "\" y2=\"" << fmt(py) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << fmt(x0 - 8) << "\" y=\"" << fmt(py + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">1e" << d
            << "</text>\n";
    }

    out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << escape_text(x_label) << "</text>\n";
    out << "<text x=\"18\" y=\"" << kHeight / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 18 " << kHeight / 2 << ")\">" << escape_text(y_label)
        << "</text>\n";

    for (const auto& s : series) {
        std::string poly;
        for (const auto& pt : s.points) {
            if (!plottable(pt[0], pt[1])) {
                continue;
            }
            if (!poly.empty()) {
                poly += ' ';
            }
            poly += fmt(sx(pt[0])) + "," + fmt(sy(pt[1]));
        }
        if (!poly.empty()) {
            out << "<polyline points=\"" << poly << "\" fill=\"none\" stroke=\"" << s.color
                << "\" stroke-width=\"1.5\"/>\n";
        }
        for (const auto& pt : s.points) {
            if (!plottable(pt[0], pt[1])) {
                continue;
            }
            out << "<circle cx=\"" << fmt(sx(pt[0])) << "\" cy=\"" << fmt(sy(pt[1]))
                << "\" r=\"2.5\" fill=\"" << s.color << "\"/>\n";
        }
    }

    // legend, top right
    double ly = kMarginTop + 12.0;
    for (const auto& s : series) {
        const double lx = kWidth - kMarginRight - 170.0;
        out << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly - 4) << "\" x2=\""
            << fmt(lx + 24) << "\" y2=\"" << fmt(ly - 4) << "\" stroke=\"" << s.color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << fmt(lx + 30) << "\" y=\"" << fmt(ly)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape_text(s.name)
            << "</text>\n";
        ly += 16.0;
    }

    out << "</svg>\n";
}

void write_loglog_plot_file(const std::filesystem::path& path,
                            const std::string& title,
                            const std::string& x_label,
                            const std::string& y_label,
                            std::span<const PlotSeries> series) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write '" + path.string() + "'");
    }
    write_loglog_plot(out, title, x_label, y_label, series);
}

} // namespace qaoaws
