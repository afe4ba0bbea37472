#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epg/graph.hpp"

namespace epg {

enum class WitnessKind { S3, M1, M1_ELL, M2, M3, CYCLE_GE4 };

std::string witness_kind_name(WitnessKind kind);

// vertex_map[i] is the host vertex playing pattern vertex i+1.
struct Witness {
    WitnessKind kind;
    std::vector<int> vertex_map;
    int ell = -1;  // only meaningful for M1_ELL
};

// Finds an induced copy of pattern in host. Returns the lexicographically
// smallest mapping under ascending pattern-vertex order, or nullopt.
std::optional<std::vector<int>> find_induced(const Graph& host, const Graph& pattern);

}  // namespace epg
