#include <array>
#include <cstdio>
#include <vector>

#include "fstar/error.hpp"
#include "fstar/io_report.hpp"
#include "fstar/simd/kernels.hpp"

namespace fstar {

namespace {

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string px(double v) {
    char buf[32];
    const int len = std::snprintf(buf, sizeof buf, "%.4f", v);
    return std::string(buf, static_cast<std::size_t>(len));
}

double to_x(double value) { return kPlotLeft + kPlotSize * value; }
double to_y(double value) { return kPlotTop + kPlotSize * (1.0 - value); }

std::string escape_xml(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string svg_open(double width, double height) {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           px(width) + "\" height=\"" + px(height) + "\" viewBox=\"0 0 " + px(width) + " " + px(height) +
           "\" font-family=\"sans-serif\" font-size=\"12\">\n";
}

// Frame, ticks at 0.2 intervals and axis titles for one unit-square panel.
std::string axes(std::string_view x_title, std::string_view y_title) {
    std::string out;
    out += "<rect class=\"frame\" x=\"" + px(kPlotLeft) + "\" y=\"" + px(kPlotTop) + "\" width=\"" +
           px(kPlotSize) + "\" height=\"" + px(kPlotSize) + "\" fill=\"none\" stroke=\"#000000\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double v = i / 5.0;
        char label[8];
        std::snprintf(label, sizeof label, "%.1f", v);
        out += "<line class=\"tick\" x1=\"" + px(to_x(v)) + "\" y1=\"" + px(to_y(0.0)) + "\" x2=\"" +
               px(to_x(v)) + "\" y2=\"" + px(to_y(0.0) + 5.0) + "\" stroke=\"#000000\"/>\n";
        out += "<text x=\"" + px(to_x(v)) + "\" y=\"" + px(to_y(0.0) + 18.0) + "\" text-anchor=\"middle\">" +
               label + "</text>\n";
        out += "<line class=\"tick\" x1=\"" + px(kPlotLeft - 5.0) + "\" y1=\"" + px(to_y(v)) + "\" x2=\"" +
               px(kPlotLeft) + "\" y2=\"" + px(to_y(v)) + "\" stroke=\"#000000\"/>\n";
        out += "<text x=\"" + px(kPlotLeft - 8.0) + "\" y=\"" + px(to_y(v) + 4.0) + "\" text-anchor=\"end\">" +
               label + "</text>\n";
    }
    out += "<text class=\"axis-title\" x=\"" + px(to_x(0.5)) + "\" y=\"" + px(to_y(0.0) + 38.0) +
           "\" text-anchor=\"middle\">" + escape_xml(x_title) + "</text>\n";
    out += "<text class=\"axis-title\" x=\"" + px(kPlotLeft - 40.0) + "\" y=\"" + px(to_y(0.5)) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 " + px(kPlotLeft - 40.0) + " " + px(to_y(0.5)) +
           ")\">" + escape_xml(y_title) + "</text>\n";
    return out;
}

}  // namespace

std::string transform_svg() {
    std::vector<double> f(kTransformSamples);
    std::vector<double> fstar(kTransformSamples);
    for (int i = 0; i < kTransformSamples; ++i) f[i] = static_cast<double>(i) / (kTransformSamples - 1);
    simd::f_to_fstar(f, fstar);

    std::string out = svg_open(kPanelWidth, kPanelHeight);
    out += "<title>F* = F/(2-F)</title>\n";
    out += axes("F", "F*");
    out += "<line class=\"identity\" x1=\"" + px(to_x(0.0)) + "\" y1=\"" + px(to_y(0.0)) + "\" x2=\"" +
           px(to_x(1.0)) + "\" y2=\"" + px(to_y(1.0)) +
           "\" stroke=\"#888888\" stroke-dasharray=\"4 4\"/>\n";
    out += "<path class=\"transform\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" d=\"";
    for (int i = 0; i < kTransformSamples; ++i) {
        out += i == 0 ? "M" : " L";
        out += px(to_x(f[i]));
        out += ' ';
        out += px(to_y(fstar[i]));
    }
    out += "\"/>\n</svg>\n";
    return out;
}

void render_transform_svg(const std::filesystem::path& path) { write_text_file(path, transform_svg()); }

std::string sweep_svg(std::span<const NamedCurves> series) {
    if (series.empty() || series.front().curves.empty()) throw ValidationError("curves", "nothing to render");

    const auto& reference = series.front().curves;
    const auto& grid = reference.front().points;
    for (const auto& s : series) {
        if (s.curves.size() != reference.size()) throw ValidationError("curves", "series differ in metric count");
        for (std::size_t k = 0; k < s.curves.size(); ++k) {
            const auto& c = s.curves[k];
            if (c.metric_id != reference[k].metric_id) throw ValidationError("curves", "series differ in metrics");
            if (c.points.size() != grid.size()) throw ValidationError("curves", "mixed grids");
            for (std::size_t i = 0; i < grid.size(); ++i) {
                if (c.points[i].t != grid[i].t) throw ValidationError("curves", "mixed grids");
            }
        }
    }

    const double width = kPanelWidth * static_cast<double>(reference.size());
    std::string out = svg_open(width, kPanelHeight);
    out += "<title>threshold sweep</title>\n";
    for (std::size_t k = 0; k < reference.size(); ++k) {
        const std::string metric = escape_xml(reference[k].metric_id);
        const std::string clip_id = "clip" + std::to_string(k);
        out += "<g class=\"panel\" data-metric=\"" + metric + "\" transform=\"translate(" +
               px(kPanelWidth * static_cast<double>(k)) + " 0)\">\n";
        out += "<clipPath id=\"" + clip_id + "\"><rect x=\"" + px(kPlotLeft) + "\" y=\"" + px(kPlotTop) +
               "\" width=\"" + px(kPlotSize) + "\" height=\"" + px(kPlotSize) + "\"/></clipPath>\n";
        out += "<text class=\"panel-title\" x=\"" + px(to_x(0.5)) + "\" y=\"" + px(kPlotTop - 10.0) +
               "\" text-anchor=\"middle\">" + metric + "</text>\n";
        out += axes("t", reference[k].metric_id);

        for (std::size_t s = 0; s < series.size(); ++s) {
            const std::string color = kPalette[s % kPalette.size()];
            const std::string name = escape_xml(series[s].name);
            const auto& points = series[s].curves[k].points;
            std::size_t i = 0;
            while (i < points.size()) {
                if (!points[i].value.is_defined()) {
                    ++i;
                    continue;
                }
                std::string ts, vs, coords;
                for (; i < points.size() && points[i].value.is_defined(); ++i) {
                    const double v = points[i].value.value();
                    if (!ts.empty()) {
                        ts += ' ';
                        vs += ' ';
                        coords += ' ';
                    }
                    ts += format_shortest(points[i].t);
                    vs += format_17(v);
                    coords += px(to_x(points[i].t)) + "," + px(to_y(v));
                }
                out += "<polyline class=\"series\" data-series=\"" + name + "\" data-t=\"" + ts + "\" data-v=\"" +
                       vs + "\" clip-path=\"url(#" + clip_id + ")\" fill=\"none\" stroke=\"" + color +
                       "\" stroke-width=\"1.5\" points=\"" + coords + "\"/>\n";
            }
            const double ly = kPlotTop + 14.0 + 16.0 * static_cast<double>(s);
            out += "<g class=\"legend\"><line x1=\"" + px(kPlotLeft + kPlotSize - 90.0) + "\" y1=\"" + px(ly - 4.0) +
                   "\" x2=\"" + px(kPlotLeft + kPlotSize - 70.0) + "\" y2=\"" + px(ly - 4.0) + "\" stroke=\"" +
                   color + "\" stroke-width=\"2\"/><text x=\"" + px(kPlotLeft + kPlotSize - 65.0) + "\" y=\"" +
                   px(ly) + "\">" + name + "</text></g>\n";
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

void render_sweep_svg(std::span<const NamedCurves> series, const std::filesystem::path& path) {
    write_text_file(path, sweep_svg(series));
}

}  // namespace fstar
