#pragma once

#include <optional>

#include "epg/graph.hpp"
#include "epg/grid.hpp"

namespace epg {

// Exact interval-graph recognition by umbrella-free ordering search. The
// search is exponential, so inputs larger than limit are refused with
// std::invalid_argument.
bool is_interval(const Graph& g, int limit = 10);

enum class SearchStatus { FOUND, NONE_WITHIN_BOUND, BUDGET_EXCEEDED };

struct SearchOutcome {
    SearchStatus status;
    std::optional<EpgRepresentation> rep;  // set iff FOUND, already compacted
    int bound = 0;                         // grid lines per axis allowed
    long long nodes_expanded = 0;          // candidate fragments generated
};

// Complete search for a representation with at most k bends per path;
// monotonic restricts paths to ascending staircases. The geometry is
// explored through the relative order of grid lines, at most bound per
// axis. bound 0 picks n*(k+2), which is safe: compacting a representation
// leaves no grid line without a path corner, so NONE_WITHIN_BOUND at the
// default bound means no representation exists at all.
SearchOutcome bounded_grid_search(const Graph& g, int k, bool monotonic = false, int bound = 0,
                                  long long budget = 50'000'000);

// Single-bend representability of a maximal outerplanar graph, decided by
// direct structural rules on the arrangement of its degree-three dual faces.
// Independent of the assignment machinery, for cross-checking it.
bool m_free_direct(const Graph& g);

struct ExactBendNumbers {
    std::optional<int> b, bm;  // nullopt when the budget ran out first
    long long nodes_expanded = 0;
};

// Exact bend numbers by escalating bounded searches (k = 0..4), with an
// interval-recognition shortcut at level zero for small inputs.
ExactBendNumbers bend_number_exact(const Graph& g, long long budget = 50'000'000);

}  // namespace epg
