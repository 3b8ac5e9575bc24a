#include "netindex/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace netindex {

namespace {

constexpr double kWidth = 740;
constexpr double kChartHeight = 360;
constexpr double kMarginLeft = 70;
constexpr double kMarginRight = 24;
constexpr double kMarginTop = 58;
constexpr double kMarginBottom = 48;

const char* family_color(Family family) {
    switch (family) {
        case Family::SL: return "#1f77b4";
        case Family::CS: return "#d62728";
        case Family::HX: return "#2ca02c";
        case Family::OX: return "#9467bd";
        case Family::HC: return "#ff7f0e";
    }
    throw std::logic_error("unhandled Family value");
}

std::string num(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    return buf;
}

std::string tick_label(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", value);
    return buf;
}

struct Series {
    Family family;
    std::vector<std::pair<int, double>> points;  // (n, log10), n ascending
};

struct Chart {
    IndexKind index;
    std::string param;
    std::vector<Series> series;  // family order
};

std::vector<Chart> charts_from_rows(const std::vector<SweepRow>& rows) {
    std::map<std::pair<IndexKind, std::string>, std::map<Family, std::map<int, double>>> grouped;
    for (const SweepRow& row : rows)
        grouped[{row.index, row.param}][row.family][row.n] = row.value_log10;

    std::vector<Chart> charts;
    for (const auto& [key, families] : grouped) {
        Chart chart{key.first, key.second, {}};
        for (const auto& [family, points] : families) {
            Series series{family, {points.begin(), points.end()}};
            chart.series.push_back(std::move(series));
        }
        charts.push_back(std::move(chart));
    }
    return charts;
}

void render_chart(std::string& svg, const Chart& chart, double y_offset) {
    double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
    bool first = true;
    for (const Series& series : chart.series) {
        for (const auto& [n, value] : series.points) {
            if (first) {
                x_lo = x_hi = n;
                y_lo = y_hi = value;
                first = false;
            } else {
                x_lo = std::min(x_lo, static_cast<double>(n));
                x_hi = std::max(x_hi, static_cast<double>(n));
                y_lo = std::min(y_lo, value);
                y_hi = std::max(y_hi, value);
            }
        }
    }
    y_lo = std::min(y_lo, 0.0);
    if (x_hi - x_lo < 1e-9) {
        x_lo -= 1;
        x_hi += 1;
    }
    if (y_hi - y_lo < 1e-9) {
        y_lo -= 1;
        y_hi += 1;
    } else {
        const double pad = (y_hi - y_lo) * 0.05;
        y_hi += pad;
    }

    const double plot_left = kMarginLeft;
    const double plot_right = kWidth - kMarginRight;
    const double plot_top = y_offset + kMarginTop;
    const double plot_bottom = y_offset + kChartHeight - kMarginBottom;
    const auto x_of = [&](double n) {
        return plot_left + (n - x_lo) / (x_hi - x_lo) * (plot_right - plot_left);
    };
    const auto y_of = [&](double v) {
        return plot_bottom - (v - y_lo) / (y_hi - y_lo) * (plot_bottom - plot_top);
    };

    svg += "<g class=\"chart\">\n";

    std::string title(index_name(chart.index));
    if (!chart.param.empty()) title += " (" + chart.param + ")";
    svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"" + num(y_offset + 22) +
           "\" text-anchor=\"middle\" font-size=\"15\" font-weight=\"bold\">" + title +
           "</text>\n";

    // legend row under the title
    double legend_x = plot_left;
    const double legend_y = y_offset + 40;
    for (const Series& series : chart.series) {
        const std::string color = family_color(series.family);
        svg += "<line x1=\"" + num(legend_x) + "\" y1=\"" + num(legend_y - 4) + "\" x2=\"" +
               num(legend_x + 22) + "\" y2=\"" + num(legend_y - 4) + "\" stroke=\"" + color +
               "\" stroke-width=\"2.5\"/>\n";
        svg += "<text x=\"" + num(legend_x + 27) + "\" y=\"" + num(legend_y) +
               "\" font-size=\"12\">" + std::string(family_name(series.family)) + "</text>\n";
        legend_x += 75;
    }

    // frame
    svg += "<rect x=\"" + num(plot_left) + "\" y=\"" + num(plot_top) + "\" width=\"" +
           num(plot_right - plot_left) + "\" height=\"" + num(plot_bottom - plot_top) +
           "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    // x ticks at integer dimensions
    const int n_first = static_cast<int>(std::ceil(x_lo));
    const int n_last = static_cast<int>(std::floor(x_hi));
    const int step = std::max(1, (n_last - n_first) / 12 + ((n_last - n_first) % 12 ? 1 : 0));
    for (int n = n_first; n <= n_last; n += step) {
        const double x = x_of(n);
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(plot_bottom) + "\" x2=\"" + num(x) +
               "\" y2=\"" + num(plot_bottom + 5) + "\" stroke=\"#333333\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(plot_bottom + 18) +
               "\" text-anchor=\"middle\" font-size=\"11\">" + std::to_string(n) + "</text>\n";
    }

    // y ticks
    constexpr int kYTicks = 6;
    for (int i = 0; i < kYTicks; ++i) {
        const double value = y_lo + (y_hi - y_lo) * i / (kYTicks - 1);
        const double y = y_of(value);
        svg += "<line x1=\"" + num(plot_left - 5) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(plot_left) + "\" y2=\"" + num(y) + "\" stroke=\"#333333\"/>\n";
        svg += "<text x=\"" + num(plot_left - 9) + "\" y=\"" + num(y + 4) +
               "\" text-anchor=\"end\" font-size=\"11\">" + tick_label(value) + "</text>\n";
    }

    // axis labels
    svg += "<text x=\"" + num((plot_left + plot_right) / 2) + "\" y=\"" +
           num(plot_bottom + 36) + "\" text-anchor=\"middle\" font-size=\"12\">n</text>\n";
    svg += "<text x=\"18\" y=\"" + num((plot_top + plot_bottom) / 2) +
           "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 18 " +
           num((plot_top + plot_bottom) / 2) + ")\">log10(value)</text>\n";

    // series
    for (const Series& series : chart.series) {
        const std::string color = family_color(series.family);
        if (series.points.size() > 1) {
            std::string points;
            for (const auto& [n, value] : series.points) {
                if (!points.empty()) points += " ";
                points += num(x_of(n)) + "," + num(y_of(value));
            }
            svg += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" + color +
                   "\" stroke-width=\"2\"/>\n";
        }
        for (const auto& [n, value] : series.points)
            svg += "<circle cx=\"" + num(x_of(n)) + "\" cy=\"" + num(y_of(value)) +
                   "\" r=\"3\" fill=\"" + color + "\"/>\n";
    }

    svg += "</g>\n";
}

}  // namespace

std::string render_sweep_svg(const std::vector<SweepRow>& rows) {
    const std::vector<Chart> charts = charts_from_rows(rows);
    const double height = charts.empty() ? 120.0 : kChartHeight * charts.size();

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
           "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
           num(height) + "\" font-family=\"Helvetica, Arial, sans-serif\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(height) +
           "\" fill=\"#ffffff\"/>\n";
    if (charts.empty()) {
        svg += "<text x=\"" + num(kWidth / 2) +
               "\" y=\"60\" text-anchor=\"middle\" font-size=\"14\">no data</text>\n";
    } else {
        for (std::size_t i = 0; i < charts.size(); ++i)
            render_chart(svg, charts[i], kChartHeight * static_cast<double>(i));
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace netindex
