#include "epg/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <vector>

namespace epg {

namespace {

constexpr std::array<const char*, 7> kPalette = {
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2",
};

constexpr double kCell = 40.0;
constexpr double kMargin = 40.0;

}  // namespace

std::string render_svg(const EpgRepresentation& rep) {
    int cols = rep.cols(), rows = rep.rows();
    double width = 2 * kMargin + cols * kCell;
    double height = 2 * kMargin + rows * kCell;
    auto px = [&](double x) { return kMargin + x * kCell; };
    auto py = [&](double y) { return height - kMargin - y * kCell; };  // y up

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int x = 0; x <= cols; ++x)
        svg << "<line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x) << "\" y2=\""
            << py(rows) << "\" stroke=\"#dddddd\"/>\n";
    for (int y = 0; y <= rows; ++y)
        svg << "<line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(cols)
            << "\" y2=\"" << py(y) << "\" stroke=\"#dddddd\"/>\n";

    for (const auto& [id, path] : rep.paths) {
        // Deterministic per-id nudge keeps coincident path segments visible.
        double nudge = 0.12 * (id % 7 - 3) / 3.0;
        const char* color = kPalette[static_cast<size_t>(id % kPalette.size())];
        svg << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"2.5\" stroke-opacity=\"0.85\" points=\"";
        for (const GridPoint& c : path.corners())
            svg << px(c.x + nudge) << "," << py(c.y + nudge) << " ";
        svg << "\"/>\n";
        const GridPoint& start = path.corners().front();
        svg << "<text x=\"" << px(start.x + nudge) - 4 << "\" y=\"" << py(start.y + nudge) - 5
            << "\" font-family=\"monospace\" font-size=\"13\" fill=\"" << color << "\">" << id
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_ascii(const EpgRepresentation& rep) {
    int cols = rep.cols(), rows = rep.rows();
    // Points at even canvas positions, unit edge bodies at odd ones.
    int w = 2 * cols + 1, h = 2 * rows + 1;
    std::vector<std::string> canvas(static_cast<size_t>(h), std::string(static_cast<size_t>(w), ' '));
    auto glyph = [](int id) {
        int d = id % 36;
        return static_cast<char>(d < 10 ? '0' + d : 'A' + d - 10);
    };
    auto put = [&](int cx, int cy, char ch) {
        char& cell = canvas[static_cast<size_t>(2 * rows - cy)][static_cast<size_t>(cx)];
        if (cell == ' ' || cell == ch)
            cell = ch;
        else
            cell = '*';
    };
    for (const auto& [id, path] : rep.paths) {
        char ch = glyph(id);
        for (const GridEdge& e : path.unit_edges()) {
            if (e.horizontal) {
                put(2 * e.x, 2 * e.y, ch);
                put(2 * e.x + 1, 2 * e.y, ch);
                put(2 * e.x + 2, 2 * e.y, ch);
            } else {
                put(2 * e.x, 2 * e.y, ch);
                put(2 * e.x, 2 * e.y + 1, ch);
                put(2 * e.x, 2 * e.y + 2, ch);
            }
        }
    }
    std::ostringstream out;
    for (const std::string& line : canvas) {
        size_t end = line.find_last_not_of(' ');
        out << (end == std::string::npos ? "" : line.substr(0, end + 1)) << "\n";
    }
    return out.str();
}

}  // namespace epg
