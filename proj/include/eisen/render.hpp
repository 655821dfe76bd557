#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <eisen/newton.hpp>

namespace eisen {

/// Text rendering: a character grid (valuation rows top-down, power columns
/// left to right) with '*' for vertices and '+' for the other integer points
/// on hull segments, followed by one summary line per segment. Oversized
/// diagrams skip the grid and keep the summaries.
inline void render_diagram_text(const newton_diagram& d, std::ostream& os) {
    const int n = d.vertices.back().index;
    std::int64_t max_val = 0;
    for (const auto& v : d.vertices) max_val = std::max(max_val, v.val);

    os << "Newton diagram with respect to p = " << d.prime << "\n";
    if (n <= 64 && max_val <= 40) {
        std::vector<std::string> grid(static_cast<std::size_t>(max_val) + 1,
                                      std::string(static_cast<std::size_t>(n) + 1, '.'));
        const auto put = [&](int x, std::int64_t y, char c) {
            char& cell = grid[static_cast<std::size_t>(max_val - y)][static_cast<std::size_t>(x)];
            if (cell != '*') cell = c;
        };
        for (const auto& s : d.segments)
            for (const auto& pt : lattice_points_on(s)) put(pt.index, pt.val, '+');
        for (const auto& v : d.vertices) put(v.index, v.val, '*');

        int label_w = std::to_string(max_val).size();
        for (std::int64_t y = max_val; y >= 0; --y) {
            std::string label = std::to_string(y);
            os << std::string(label_w - label.size(), ' ') << label << " | ";
            const std::string& row = grid[static_cast<std::size_t>(max_val - y)];
            for (char c : row) os << c << "  ";
            os << "\n";
        }
        os << std::string(label_w, ' ') << " +-" << std::string(3 * (n + 1), '-') << "\n";
        os << std::string(label_w, ' ') << "   ";
        for (int x = 0; x <= n; ++x) {
            std::string label = std::to_string(x);
            os << label << std::string(label.size() < 3 ? 3 - label.size() : 1, ' ');
        }
        os << "\n";
    } else {
        os << "(grid omitted: " << d.vertices.size() << " vertices up to index " << n
           << ", valuation " << max_val << ")\n";
    }

    os << "vertices:";
    for (const auto& v : d.vertices) os << " (" << v.index << "," << v.val << ")";
    os << "\n";
    for (const auto& s : d.segments) {
        os << "segment (" << s.start.index << "," << s.start.val << ") -> (" << s.end.index << ","
           << s.end.val << ")  slope " << s.slope << "  lattice points " << s.lattice_points
           << "  " << (s.simple ? "simple" : "not simple");
        if (!s.simple) {
            os << "  interior:";
            const auto pts = lattice_points_on(s);
            for (std::size_t i = 1; i + 1 < pts.size(); ++i)
                os << " (" << pts[i].index << "," << pts[i].val << ")";
        }
        os << "\n";
    }
}

/// Minimal standalone SVG: axes, hull polyline, vertices as filled dots,
/// interior segment lattice points as open dots.
inline std::string render_diagram_svg(const newton_diagram& d) {
    const int n = d.vertices.back().index;
    std::int64_t max_val = 0;
    for (const auto& v : d.vertices) max_val = std::max(max_val, v.val);
    const int unit = 40, margin = 50;
    const int width = margin * 2 + unit * n;
    const int height = margin * 2 + unit * static_cast<int>(max_val == 0 ? 1 : max_val);
    const auto X = [&](std::int64_t x) { return std::to_string(margin + x * unit); };
    const auto Y = [&](std::int64_t y) { return std::to_string(height - margin - y * unit); };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int x = 0; x <= n; ++x)
        svg += "<line x1=\"" + X(x) + "\" y1=\"" + Y(0) + "\" x2=\"" + X(x) + "\" y2=\"" +
               Y(max_val) + "\" stroke=\"#eeeeee\"/>\n";
    for (std::int64_t y = 0; y <= max_val; ++y)
        svg += "<line x1=\"" + X(0) + "\" y1=\"" + Y(y) + "\" x2=\"" + X(n) + "\" y2=\"" + Y(y) +
               "\" stroke=\"#eeeeee\"/>\n";
    svg += "<polyline fill=\"none\" stroke=\"#336699\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < d.segments.size(); ++i) {
        const auto& s = d.segments[i];
        if (i == 0) svg += X(s.start.index) + "," + Y(s.start.val) + " ";
        svg += X(s.end.index) + "," + Y(s.end.val) + " ";
    }
    svg += "\"/>\n";
    for (const auto& s : d.segments) {
        const auto pts = lattice_points_on(s);
        for (std::size_t i = 1; i + 1 < pts.size(); ++i)
            svg += "<circle cx=\"" + X(pts[i].index) + "\" cy=\"" + Y(pts[i].val) +
                   "\" r=\"5\" fill=\"white\" stroke=\"#cc3333\" stroke-width=\"2\"/>\n";
    }
    for (const auto& v : d.vertices) {
        svg += "<circle cx=\"" + X(v.index) + "\" cy=\"" + Y(v.val) +
               "\" r=\"5\" fill=\"#336699\"/>\n";
        svg += "<text x=\"" + std::to_string(margin + v.index * unit + 8) + "\" y=\"" +
               std::to_string(height - margin - static_cast<int>(v.val) * unit - 8) +
               "\" font-size=\"12\">(" + std::to_string(v.index) + "," + std::to_string(v.val) +
               ")</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace eisen
