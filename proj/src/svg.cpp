#include "thzmodes/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace thzmodes::svg {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr int kPaletteSize = 10;

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

Range data_range(const std::vector<Series>& series, bool use_x) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& s : series) {
        for (double v : (use_x ? s.x : s.y)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (!(lo <= hi)) {
        lo = 0.0;
        hi = 1.0;
    }
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    }
    return {lo, hi};
}

// Round tick spacing to a 1/2/5 decade multiple.
double nice_step(double span, int target_ticks) {
    const double raw = span / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double frac = raw / mag;
    double nice = 10.0;
    if (frac <= 1.0)
        nice = 1.0;
    else if (frac <= 2.0)
        nice = 2.0;
    else if (frac <= 5.0)
        nice = 5.0;
    return nice * mag;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string coord(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

void write_line_chart(std::ostream& out, const ChartSpec& spec,
                      const std::vector<Series>& series) {
    if (series.empty())
        throw std::invalid_argument("write_line_chart: no series");

    const double margin_left = 72, margin_right = 150, margin_top = 40, margin_bottom = 52;
    const double plot_w = spec.width - margin_left - margin_right;
    const double plot_h = spec.height - margin_top - margin_bottom;
    const Range xr = data_range(series, true);
    const Range yr = data_range(series, false);

    auto px = [&](double x) { return margin_left + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    auto py = [&](double y) { return margin_top + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h; };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
        << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << " "
        << spec.height << "\">\n"
        << "<rect width=\"" << spec.width << "\" height=\"" << spec.height
        << "\" fill=\"white\"/>\n";

    // axes box
    out << "<rect x=\"" << coord(margin_left) << "\" y=\"" << coord(margin_top) << "\" width=\""
        << coord(plot_w) << "\" height=\"" << coord(plot_h)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

    const double x_step = nice_step(xr.hi - xr.lo, 6);
    for (double t = std::ceil(xr.lo / x_step) * x_step; t <= xr.hi + 1e-12 * x_step; t += x_step) {
        out << "<line x1=\"" << coord(px(t)) << "\" y1=\"" << coord(margin_top + plot_h)
            << "\" x2=\"" << coord(px(t)) << "\" y2=\"" << coord(margin_top + plot_h + 5)
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << coord(px(t)) << "\" y=\"" << coord(margin_top + plot_h + 20)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << num(t)
            << "</text>\n";
    }
    const double y_step = nice_step(yr.hi - yr.lo, 6);
    for (double t = std::ceil(yr.lo / y_step) * y_step; t <= yr.hi + 1e-12 * y_step; t += y_step) {
        out << "<line x1=\"" << coord(margin_left - 5) << "\" y1=\"" << coord(py(t))
            << "\" x2=\"" << coord(margin_left) << "\" y2=\"" << coord(py(t))
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << coord(margin_left - 8) << "\" y=\"" << coord(py(t) + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" << num(t)
            << "</text>\n";
    }

    out << "<text x=\"" << coord(margin_left + plot_w / 2) << "\" y=\"24\" "
        << "font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\">" << spec.title
        << "</text>\n"
        << "<text x=\"" << coord(margin_left + plot_w / 2) << "\" y=\""
        << coord(spec.height - 12.0)
        << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" << spec.x_label
        << "</text>\n"
        << "<text x=\"18\" y=\"" << coord(margin_top + plot_h / 2)
        << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << coord(margin_top + plot_h / 2) << ")\">" << spec.y_label << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const auto& ser = series[s];
        if (ser.x.size() != ser.y.size())
            throw std::invalid_argument("write_line_chart: series '" + ser.label
                                        + "' has mismatched x/y lengths");
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[s % kPaletteSize]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < ser.x.size(); ++k) {
            if (k)
                out << " ";
            out << coord(px(ser.x[k])) << "," << coord(py(ser.y[k]));
        }
        out << "\"/>\n";
    }

    for (std::size_t s = 0; s < series.size(); ++s) {
        const double ly = margin_top + 14.0 + 18.0 * static_cast<double>(s);
        out << "<line x1=\"" << coord(margin_left + plot_w + 10) << "\" y1=\"" << coord(ly)
            << "\" x2=\"" << coord(margin_left + plot_w + 34) << "\" y2=\"" << coord(ly)
            << "\" stroke=\"" << kPalette[s % kPaletteSize] << "\" stroke-width=\"1.5\"/>\n"
            << "<text x=\"" << coord(margin_left + plot_w + 40) << "\" y=\"" << coord(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[s].label
            << "</text>\n";
    }

    out << "</svg>\n";
}

} // namespace thzmodes::svg
