#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "epg/graph.hpp"

namespace epg {

// Biconnected component together with its outer boundary, when one exists.
struct Block {
    std::vector<int> vertices;              // sorted
    std::vector<std::pair<int, int>> edges;  // normalized, sorted
    std::vector<int> cycle;                  // boundary order; empty for edge blocks
};

// Exact test. A graph is outerplanar iff each block is, and a 2-connected
// block is outerplanar iff it has a Hamilton cycle whose remaining edges are
// pairwise non-crossing chords; both directions are verified explicitly.
bool is_outerplanar(const Graph& g);

// Blocks sorted by vertex list, each with its boundary cycle reconstructed;
// nullopt iff the graph is not outerplanar. Isolated vertices have no block.
std::optional<std::vector<Block>> outerplanar_blocks(const Graph& g);

// Connected, n >= 3, outerplanar, and every internal face a triangle (which
// the edge count m == 2n-3 forces).
bool is_maximal_outerplanar(const Graph& g);

// Internal faces of a maximal outerplanar graph as sorted triples in
// lexicographic order. Throws std::invalid_argument on other inputs.
std::vector<std::array<int, 3>> triangle_faces(const Graph& g);

// Vertex order of first occurrence along the outer boundary walk, starting
// at vertex 1 and heading toward the smaller boundary neighbor; blocks
// hanging at a cut vertex are walked in ascending order of their vertex
// lists. Requires a connected outerplanar input; throws
// std::invalid_argument otherwise.
std::vector<int> nice_labeling(const Graph& g);

// Checks the order against the edge separation property: for every edge
// {u,v} and every vertex-disjoint edge {x,y}, the positions of x and y are
// either both strictly inside the position interval of {u,v} or both
// outside it. Returns the first violating pair in lexicographic edge order.
std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> check_separation(
    const Graph& g, const std::vector<int>& order);

struct SeparationViolation {
    std::pair<int, int> edge;
    std::vector<int> path;  // avoids both edge endpoints, straddles their span
};

// Checks the order against the separation property: for every edge {u,v},
// every component of G - {u,v} lies entirely inside or entirely outside the
// open position interval spanned by u and v. order[i] is the vertex at
// position i+1; returns a violating edge and path if one exists.
std::optional<SeparationViolation> check_path_separation(const Graph& g,
                                                         const std::vector<int>& order);

}  // namespace epg
