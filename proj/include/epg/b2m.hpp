#pragma once

#include <epg/graph.hpp>
#include <epg/grid.hpp>

namespace epg {

// Builds a monotonic EPG representation with at most two bends per path.
// Works for any outerplanar graph, connected or not; throws
// std::invalid_argument if the graph is not outerplanar.
EpgRepresentation build_b2m(const Graph& g);

// Closed-form monotonic 2-bend representation of the n-sun (n >= 3):
// clique vertices 1..n, ray vertices n+1..2n where n+i is adjacent to
// i and i mod n + 1.
EpgRepresentation build_nsun_b2m(int n);

}  // namespace epg
