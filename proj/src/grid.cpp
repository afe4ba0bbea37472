#include "epg/grid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace epg {

GridPath::GridPath(std::vector<GridPoint> points) {
    if (points.size() < 2) throw std::invalid_argument("path needs at least two points");
    corners_.push_back(points.front());
    for (size_t i = 1; i < points.size(); ++i) {
        const GridPoint& p = points[i];
        GridPoint& last = corners_.back();
        if (p == last) throw std::invalid_argument("empty path segment");
        if (p.x != last.x && p.y != last.y) throw std::invalid_argument("diagonal path segment");
        if (corners_.size() >= 2) {
            const GridPoint& prev = corners_[corners_.size() - 2];
            bool was_horizontal = prev.y == last.y;
            bool is_horizontal = p.y == last.y;
            if (was_horizontal == is_horizontal) {
                // Collinear with the previous segment: extend unless it doubles back.
                bool was_positive = was_horizontal ? last.x > prev.x : last.y > prev.y;
                bool is_positive = is_horizontal ? p.x > last.x : p.y > last.y;
                if (was_positive != is_positive) throw std::invalid_argument("path doubles back");
                last = p;
                continue;
            }
        }
        corners_.push_back(p);
    }
    if (corners_.size() < 2) throw std::invalid_argument("path needs at least one segment");
}

bool GridPath::monotonic() const {
    for (int dir = 0; dir < 2; ++dir) {
        bool ok = true;
        for (size_t i = 1; i < corners_.size() && ok; ++i) {
            const GridPoint& a = corners_[dir ? corners_.size() - i : i - 1];
            const GridPoint& b = corners_[dir ? corners_.size() - i - 1 : i];
            ok = b.x >= a.x && b.y >= a.y;
        }
        if (ok) return true;
    }
    return false;
}

std::vector<GridEdge> GridPath::unit_edges() const {
    std::vector<GridEdge> out;
    for (size_t i = 1; i < corners_.size(); ++i) {
        const GridPoint& a = corners_[i - 1];
        const GridPoint& b = corners_[i];
        if (a.y == b.y) {
            for (int x = std::min(a.x, b.x); x < std::max(a.x, b.x); ++x)
                out.push_back({x, a.y, true});
        } else {
            for (int y = std::min(a.y, b.y); y < std::max(a.y, b.y); ++y)
                out.push_back({a.x, y, false});
        }
    }
    return out;
}

int EpgRepresentation::cols() const {
    int m = 0;
    for (const auto& [id, p] : paths)
        for (const GridPoint& c : p.corners()) m = std::max(m, c.x);
    return m;
}

int EpgRepresentation::rows() const {
    int m = 0;
    for (const auto& [id, p] : paths)
        for (const GridPoint& c : p.corners()) m = std::max(m, c.y);
    return m;
}

VerificationReport verify_representation(const Graph& g, const EpgRepresentation& rep) {
    VerificationReport report;
    for (int v = 1; v <= g.num_vertices(); ++v)
        if (!rep.paths.count(v)) report.missing_vertices.push_back(v);
    for (const auto& [id, path] : rep.paths)
        if (id < 1 || id > g.num_vertices()) report.unknown_vertices.push_back(id);

    // Pairs sharing a unit edge are found through the edge's owner list, so
    // the cost scales with the drawing, not with the number of path pairs.
    std::map<GridEdge, std::vector<int>> owners;
    for (const auto& [id, path] : rep.paths) {
        report.max_bends = std::max(report.max_bends, path.bends());
        if (!path.monotonic()) report.monotonic_all = false;
        for (const GridEdge& e : path.unit_edges()) owners[e].push_back(id);
    }
    std::set<std::pair<int, int>> shared;
    for (auto& [e, ids] : owners) {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (size_t i = 0; i < ids.size(); ++i) {
            if (ids[i] < 1 || ids[i] > g.num_vertices()) continue;
            for (size_t j = i + 1; j < ids.size(); ++j) {
                if (ids[j] > g.num_vertices()) break;
                shared.emplace(ids[i], ids[j]);
            }
        }
    }
    for (const auto& [u, v] : g.edges())
        if (rep.paths.count(u) && rep.paths.count(v) && !shared.count({u, v}))
            report.missing_intersections.emplace_back(u, v);
    for (const auto& [u, v] : shared)
        if (!g.has_edge(u, v)) report.extra_intersections.emplace_back(u, v);

    report.ok = report.missing_vertices.empty() && report.unknown_vertices.empty() &&
                report.missing_intersections.empty() && report.extra_intersections.empty();
    return report;
}

EpgRepresentation compact(const EpgRepresentation& rep) {
    std::set<int> xs, ys;
    for (const auto& [id, path] : rep.paths)
        for (const GridPoint& c : path.corners()) {
            xs.insert(c.x);
            ys.insert(c.y);
        }
    std::map<int, int> xmap, ymap;
    int next = 0;
    for (int x : xs) xmap[x] = next++;
    next = 0;
    for (int y : ys) ymap[y] = next++;

    EpgRepresentation out;
    for (const auto& [id, path] : rep.paths) {
        std::vector<GridPoint> corners;
        corners.reserve(path.corners().size());
        for (const GridPoint& c : path.corners()) corners.push_back({xmap[c.x], ymap[c.y]});
        out.paths.emplace(id, GridPath(std::move(corners)));
    }
    return out;
}

}  // namespace epg
