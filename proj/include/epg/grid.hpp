#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "epg/graph.hpp"

namespace epg {

struct GridPoint {
    int x = 0;  // column
    int y = 0;  // row

    friend bool operator==(const GridPoint& a, const GridPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const GridPoint& a, const GridPoint& b) { return !(a == b); }
    friend bool operator<(const GridPoint& a, const GridPoint& b) {
        return std::tie(a.x, a.y) < std::tie(b.x, b.y);
    }
};

// A unit edge of the grid: (x,y)-(x+1,y) when horizontal, (x,y)-(x,y+1) when
// vertical. Identified by its lower-left endpoint.
struct GridEdge {
    int x = 0;
    int y = 0;
    bool horizontal = true;

    friend bool operator==(const GridEdge& a, const GridEdge& b) {
        return a.x == b.x && a.y == b.y && a.horizontal == b.horizontal;
    }
    friend bool operator<(const GridEdge& a, const GridEdge& b) {
        return std::tie(a.x, a.y, a.horizontal) < std::tie(b.x, b.y, b.horizontal);
    }
};

// Axis-parallel path stored as its corner sequence (endpoints and bends).
// Construction merges collinear runs and rejects empty segments, diagonal
// steps and U-turns, so bends() is just the interior corner count.
class GridPath {
   public:
    GridPath() = default;
    explicit GridPath(std::vector<GridPoint> points);

    const std::vector<GridPoint>& corners() const { return corners_; }
    int bends() const { return static_cast<int>(corners_.size()) - 2; }

    // Ascending staircase in one of the two traversal directions.
    bool monotonic() const;

    std::vector<GridEdge> unit_edges() const;

   private:
    std::vector<GridPoint> corners_;
};

struct EpgRepresentation {
    std::map<int, GridPath> paths;  // vertex id -> path

    int cols() const;  // max x over all corners (0 when empty)
    int rows() const;  // max y over all corners
};

struct VerificationReport {
    bool ok = false;
    std::vector<int> missing_vertices;                     // in graph, no path
    std::vector<int> unknown_vertices;                     // path for id outside 1..n
    std::vector<std::pair<int, int>> missing_intersections;  // edges not realized
    std::vector<std::pair<int, int>> extra_intersections;    // non-edges realized
    int max_bends = 0;
    bool monotonic_all = true;
};

// Exact check: paths of adjacent vertices must share at least one grid edge,
// paths of non-adjacent vertices none. Sharing a point only is not sharing.
VerificationReport verify_representation(const Graph& g, const EpgRepresentation& rep);

// Drops grid lines that host no corner of any path and renumbers the rest
// from 0. Corner lines are all kept, so overlaps and gaps are preserved and
// the result represents the same intersection graph.
EpgRepresentation compact(const EpgRepresentation& rep);

}  // namespace epg
