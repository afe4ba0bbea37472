#include "epg/subgraph.hpp"

#include <algorithm>

namespace epg {

std::string witness_kind_name(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::S3: return "S3";
        case WitnessKind::M1: return "M1";
        case WitnessKind::M1_ELL: return "M1_ELL";
        case WitnessKind::M2: return "M2";
        case WitnessKind::M3: return "M3";
        case WitnessKind::CYCLE_GE4: return "CYCLE_GE4";
    }
    return "UNKNOWN";
}

namespace {

struct InducedSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> map;        // pattern vertex (1-based) -> host vertex, 0 = unset
    std::vector<char> used;      // host vertex taken

    bool extend(int p) {
        int np = pattern.num_vertices();
        if (p > np) return true;
        for (int h = 1; h <= host.num_vertices(); ++h) {
            if (used[static_cast<size_t>(h)]) continue;
            if (host.degree(h) < pattern.degree(p)) continue;
            bool ok = true;
            for (int q = 1; q < p; ++q) {
                bool want = pattern.has_edge(p, q);
                bool have = host.has_edge(h, map[static_cast<size_t>(q)]);
                if (want != have) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[static_cast<size_t>(p)] = h;
            used[static_cast<size_t>(h)] = 1;
            if (extend(p + 1)) return true;
            used[static_cast<size_t>(h)] = 0;
            map[static_cast<size_t>(p)] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& host, const Graph& pattern) {
    if (pattern.num_vertices() > host.num_vertices()) return std::nullopt;
    InducedSearch s{host, pattern,
                    std::vector<int>(static_cast<size_t>(pattern.num_vertices()) + 1, 0),
                    std::vector<char>(static_cast<size_t>(host.num_vertices()) + 1, 0)};
    if (!s.extend(1)) return std::nullopt;
    return std::vector<int>(s.map.begin() + 1, s.map.end());
}

}  // namespace epg
