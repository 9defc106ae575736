#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "wordlecast/csv.hpp"
#include "wordlecast/error.hpp"

namespace wordlecast::svg {

struct LineSeries {
    std::string name;
    std::string color; // CSS color
    std::vector<std::pair<double, double>> points;
};

struct PieSlice {
    std::string label;
    double value = 0.0;
    std::string color;
};

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace detail

/// Self-contained SVG line chart.  Axis ranges cover all series with a
/// small margin; five ticks per axis labeled with the data values.
inline std::string line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label, const std::vector<LineSeries>& series,
                              int width = 860, int height = 480) {
    bool any = false;
    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            if (!any) {
                x_min = x_max = x;
                y_min = y_max = y;
                any = true;
            }
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    if (!any) throw std::invalid_argument("line_chart: no points to plot");
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    const double left = 70.0, right = 20.0, top = 42.0, bottom = 52.0;
    const double pw = width - left - right;
    const double ph = height - top - bottom;
    auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * pw; };
    auto py = [&](double y) { return top + (1.0 - (y - y_min) / (y_max - y_min)) * ph; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
           " " + std::to_string(height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + detail::num(width / 2.0) +
           "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
           detail::escape(title) + "</text>\n";

    for (int t = 0; t <= 4; ++t) {
        const double fx = x_min + (x_max - x_min) * t / 4.0;
        const double fy = y_min + (y_max - y_min) * t / 4.0;
        const double gx = px(fx);
        const double gy = py(fy);
        out += "<line x1=\"" + detail::num(gx) + "\" y1=\"" + detail::num(top) + "\" x2=\"" +
               detail::num(gx) + "\" y2=\"" + detail::num(top + ph) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out += "<line x1=\"" + detail::num(left) + "\" y1=\"" + detail::num(gy) + "\" x2=\"" +
               detail::num(left + pw) + "\" y2=\"" + detail::num(gy) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + detail::num(gx) + "\" y=\"" + detail::num(top + ph + 18.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_number(std::round(fx * 100.0) / 100.0) + "</text>\n";
        out += "<text x=\"" + detail::num(left - 8.0) + "\" y=\"" + detail::num(gy + 4.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_number(std::round(fy * 100.0) / 100.0) + "</text>\n";
    }
    out += "<rect x=\"" + detail::num(left) + "\" y=\"" + detail::num(top) + "\" width=\"" +
           detail::num(pw) + "\" height=\"" + detail::num(ph) +
           "\" fill=\"none\" stroke=\"#444444\"/>\n";
    out += "<text x=\"" + detail::num(left + pw / 2.0) + "\" y=\"" +
           detail::num(height - 12.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
           detail::escape(x_label) + "</text>\n";
    out += "<text x=\"16\" y=\"" + detail::num(top + ph / 2.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 " +
           detail::num(top + ph / 2.0) + ")\">" + detail::escape(y_label) + "</text>\n";

    double legend_y = top + 14.0;
    for (const auto& s : series) {
        if (s.points.empty()) continue;
        std::string pts;
        for (const auto& [x, y] : s.points) {
            pts += detail::num(px(x)) + "," + detail::num(py(y)) + " ";
        }
        out += "<polyline fill=\"none\" stroke=\"" + s.color +
               "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
        out += "<rect x=\"" + detail::num(left + pw - 150.0) + "\" y=\"" +
               detail::num(legend_y - 9.0) + "\" width=\"12\" height=\"12\" fill=\"" + s.color +
               "\"/>\n";
        out += "<text x=\"" + detail::num(left + pw - 132.0) + "\" y=\"" + detail::num(legend_y) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + detail::escape(s.name) +
               "</text>\n";
        legend_y += 16.0;
    }
    out += "</svg>\n";
    return out;
}

/// Pie chart with one wedge per slice and a side legend carrying the
/// slice values.
inline std::string pie_chart(const std::string& title, const std::vector<PieSlice>& slices,
                             int width = 640, int height = 480) {
    double total = 0.0;
    for (const auto& s : slices) {
        if (s.value < 0.0) throw std::invalid_argument("pie_chart: negative slice");
        total += s.value;
    }
    if (!(total > 0.0)) throw std::invalid_argument("pie_chart: nothing to plot");

    const double cx = 200.0, cy = height / 2.0 + 10.0;
    const double r = std::min(160.0, height / 2.0 - 50.0);

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
           " " + std::to_string(height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + detail::num(width / 2.0) +
           "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
           detail::escape(title) + "</text>\n";

    double angle = -std::acos(-1.0) / 2.0; // start at 12 o'clock
    double legend_y = 60.0;
    for (const auto& s : slices) {
        const double frac = s.value / total;
        const double sweep = frac * 2.0 * std::acos(-1.0);
        const double a0 = angle;
        const double a1 = angle + sweep;
        angle = a1;
        const double x0 = cx + r * std::cos(a0), y0 = cy + r * std::sin(a0);
        const double x1 = cx + r * std::cos(a1), y1 = cy + r * std::sin(a1);
        const int large = sweep > std::acos(-1.0) ? 1 : 0;
        if (frac >= 1.0 - 1e-12) {
            out += "<circle cx=\"" + detail::num(cx) + "\" cy=\"" + detail::num(cy) + "\" r=\"" +
                   detail::num(r) + "\" fill=\"" + s.color + "\" stroke=\"white\"/>\n";
        } else if (frac > 1e-12) {
            out += "<path d=\"M " + detail::num(cx) + " " + detail::num(cy) + " L " +
                   detail::num(x0) + " " + detail::num(y0) + " A " + detail::num(r) + " " +
                   detail::num(r) + " 0 " + std::to_string(large) + " 1 " + detail::num(x1) + " " +
                   detail::num(y1) + " Z\" fill=\"" + s.color + "\" stroke=\"white\"/>\n";
        }
        out += "<rect x=\"400\" y=\"" + detail::num(legend_y - 10.0) +
               "\" width=\"12\" height=\"12\" fill=\"" + s.color + "\"/>\n";
        out += "<text x=\"418\" y=\"" + detail::num(legend_y) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + detail::escape(s.label) + ": " +
               format_number(std::round(frac * 10000.0) / 100.0) + "%</text>\n";
        legend_y += 16.0;
    }
    out += "</svg>\n";
    return out;
}

/// Deterministic qualitative palette.
inline std::string palette_color(std::size_t i) {
    static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                   "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    return colors[i % 10];
}

} // namespace wordlecast::svg
