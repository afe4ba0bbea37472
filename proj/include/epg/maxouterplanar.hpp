#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "epg/graph.hpp"
#include "epg/grid.hpp"
#include "epg/subgraph.hpp"

namespace epg {

// Inner dual of a maximal outerplanar graph: one node per triangular face,
// nodes adjacent iff their faces share an edge. Always a tree.
struct DualTree {
    std::vector<std::array<int, 3>> faces;  // faces[f-1], sorted triples in lex order
    std::vector<std::vector<int>> adj;      // adj[f] ascending; adj[0] unused

    int num_faces() const { return static_cast<int>(faces.size()); }
    int degree(int f) const { return static_cast<int>(adj[static_cast<size_t>(f)].size()); }
};

// Throws std::invalid_argument unless g is maximal outerplanar.
DualTree almost_dual(const Graph& g);

// Dual nodes of degree 3, ascending. These are exactly the central faces of
// the sun copies on three hub vertices.
std::vector<int> s3_centers(const DualTree& dual);

// Union of the central triangles: same vertex count as g, but only edges of
// degree-3 dual faces survive. The triangles of the result are exactly the
// central triangles, so obstruction patterns are searched here.
struct ReducedGraph {
    Graph graph;
    std::vector<int> kept_vertices;             // endpoints of surviving edges
    std::vector<std::array<int, 3>> triangles;  // central triangles, lex order
};

ReducedGraph reduced_graph(const Graph& g, const DualTree& dual);

// For every degree-3 dual node, the two vertices of its face whose paths
// may bend there; the third stays straight. No vertex is assigned twice.
struct Assignment {
    std::map<int, std::pair<int, int>> assigned;  // dual node -> vertex pair, ascending
    std::map<int, int> level;                     // dual node -> chain depth
    std::map<int, int> delta;                     // vertex -> dual node that claimed it
};

// The pairing procedure got stuck; the graph then holds an induced M
// obstruction inside the reduced graph, recoverable via find_m_obstruction.
struct NotMFree {
    int stop_site;           // 1 = seed pairing clash, 2 = forced overlap
    std::vector<int> duals;  // dual nodes involved at the stop
};

std::variant<Assignment, NotMFree> compute_assignment(const Graph& g, const DualTree& dual);

// Locates an induced M1 or M1^l in the reduced graph. Requires one to
// exist, i.e. compute_assignment returned NotMFree; throws std::logic_error
// if the search comes up empty.
Witness find_m_obstruction(const ReducedGraph& rg);

// Bend-free representation; requires the dual to be a path, i.e. no
// degree-3 dual node. Throws std::invalid_argument otherwise.
EpgRepresentation build_b0(const Graph& g, const DualTree& dual);

// One-bend representation driven by a successful assignment.
EpgRepresentation build_b1(const Graph& g, const DualTree& dual, const Assignment& asg);

struct MaxOutClassification {
    int b;   // bend number: 0, 1 or 2
    int bm;  // monotone bend number: 0 or 2
    std::optional<Witness> s3;             // some sun copy; present iff b >= 1
    std::optional<Witness> m_obstruction;  // present iff b == 2
};

MaxOutClassification classify_max_outerplanar(const Graph& g);

}  // namespace epg
