#pragma once

#include <cstdint>
#include <functional>

#include "epg/graph.hpp"

namespace epg {

// Visits every triangulation of the convex polygon on vertices 1..n in
// boundary order: Catalan(n-2) maximal outerplanar graphs, each with
// Hamilton cycle 1,2,...,n.
void for_each_triangulation(int n, const std::function<void(const Graph&)>& visit);

// Visits connected cacti with at most max_n vertices. Every isomorphism
// class appears at least once; a class may repeat when distinct rootings
// of the same cactus survive the canonical block ordering.
void for_each_cactus_upto(int max_n, const std::function<void(const Graph&)>& visit);

// Visits connected graphs on exactly n vertices, one per isomorphism class.
// Exhaustive over labeled graphs, so keep n <= 6.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit);

// Minimum over vertex relabelings of the packed upper-triangle adjacency
// bits. Equal codes iff isomorphic. Requires n <= 8.
std::uint64_t canonical_code(const Graph& g);

}  // namespace epg
