#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "epg/graph.hpp"
#include "epg/grid.hpp"
#include "epg/subgraph.hpp"

namespace epg {

struct CactusDecomposition {
    // Each cycle in traversal order: smallest member first, heading toward
    // its smaller cycle neighbor. Cycles sorted by smallest member.
    std::vector<std::vector<int>> cycles;
    std::vector<std::pair<int, int>> bridges;  // normalized, lex sorted
};

struct NotCactus {
    std::string reason;
    // Two cycles sharing at least two vertices, when that is the reason.
    std::vector<int> cycle_a, cycle_b;
};

std::variant<CactusDecomposition, NotCactus> decompose_cactus(const Graph& g);

// nullopt iff the cactus avoids all three obstruction families: an induced
// cycle of length at least four, the spider M2, the net M3.
std::optional<Witness> is_mc_free(const Graph& g, const CactusDecomposition& dec);

// Bend-free representation of an obstruction-free cactus; throws
// std::invalid_argument when the input is not obstruction-free.
EpgRepresentation build_b0_cactus(const Graph& g, const CactusDecomposition& dec);

// Monotonic representation with at most one bend per path; works for every
// cactus.
EpgRepresentation build_b1m_cactus(const Graph& g, const CactusDecomposition& dec);

struct CactusClassification {
    int b;   // 0 or 1; always equals bm
    int bm;
    std::optional<Witness> obstruction;  // present iff b == 1
};

// Throws std::invalid_argument when g is not a connected cactus.
CactusClassification classify_cactus(const Graph& g);

}  // namespace epg
