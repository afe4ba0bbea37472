#include "epg/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace epg {

namespace {

// Iterative Tarjan; emits each biconnected component as its edge group.
std::vector<std::vector<std::pair<int, int>>> biconnected_edge_groups(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> disc(static_cast<size_t>(n) + 1, 0), low(static_cast<size_t>(n) + 1, 0),
        parent(static_cast<size_t>(n) + 1, 0);
    std::vector<size_t> next(static_cast<size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> groups;
    int timer = 0;
    for (int s = 1; s <= n; ++s) {
        if (disc[static_cast<size_t>(s)]) continue;
        parent[static_cast<size_t>(s)] = 0;
        disc[static_cast<size_t>(s)] = low[static_cast<size_t>(s)] = ++timer;
        std::vector<int> vstack = {s};
        while (!vstack.empty()) {
            int u = vstack.back();
            const auto& nb = g.neighbors(u);
            if (next[static_cast<size_t>(u)] < nb.size()) {
                int w = nb[next[static_cast<size_t>(u)]++];
                if (!disc[static_cast<size_t>(w)]) {
                    parent[static_cast<size_t>(w)] = u;
                    disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = ++timer;
                    estack.emplace_back(u, w);
                    vstack.push_back(w);
                } else if (w != parent[static_cast<size_t>(u)] &&
                           disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(u)]) {
                    estack.emplace_back(u, w);
                    low[static_cast<size_t>(u)] =
                        std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(w)]);
                }
            } else {
                vstack.pop_back();
                if (!vstack.empty()) {
                    int p = vstack.back();
                    low[static_cast<size_t>(p)] =
                        std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(u)]);
                    if (low[static_cast<size_t>(u)] >= disc[static_cast<size_t>(p)]) {
                        std::vector<std::pair<int, int>> blk;
                        while (true) {
                            auto e = estack.back();
                            estack.pop_back();
                            blk.push_back(e);
                            if (e.first == p && e.second == u) break;
                        }
                        groups.push_back(std::move(blk));
                    }
                }
            }
        }
    }
    return groups;
}

struct PeelResult {
    std::vector<int> cycle;                 // boundary order, starts at smallest vertex
    std::vector<std::array<int, 3>> ears;   // (removed vertex, its two neighbors)
};

std::pair<int, int> norm_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Exact outerplanarity for a 2-connected block (>= 3 vertices): peel degree-2
// vertices recording ears, replay the ears backwards to rebuild the candidate
// Hamilton cycle, then verify the cycle is real and the chords nest.
std::optional<PeelResult> analyze_block(const std::vector<int>& verts,
                                        const std::vector<std::pair<int, int>>& edges) {
    size_t nb = verts.size();
    if (edges.size() > 2 * nb - 3) return std::nullopt;

    std::map<int, std::set<int>> adj;
    for (int v : verts) adj[v];
    for (const auto& [a, b] : edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::set<int> work, alive(verts.begin(), verts.end());
    for (int v : verts)
        if (adj[v].size() == 2) work.insert(v);
    std::vector<std::array<int, 3>> ears;
    while (alive.size() > 2) {
        int u = -1;
        while (!work.empty()) {
            int c = *work.begin();
            work.erase(work.begin());
            if (alive.count(c) && adj[c].size() == 2) {
                u = c;
                break;
            }
        }
        if (u < 0) return std::nullopt;
        auto it = adj[u].begin();
        int x = *it, y = *std::next(it);
        ears.push_back({u, x, y});
        adj[x].erase(u);
        adj[y].erase(u);
        alive.erase(u);
        adj.erase(u);
        if (!adj[x].count(y)) {
            // Virtual edge closing the gap; replay decides if it was earned.
            adj[x].insert(y);
            adj[y].insert(x);
        }
        if (adj[x].size() == 2) work.insert(x);
        if (adj[y].size() == 2) work.insert(y);
    }
    int a = *alive.begin(), b = *std::next(alive.begin());
    if (!adj[a].count(b)) return std::nullopt;

    // Replay: the final edge seen from both sides, each ear splices its vertex
    // into one present instance of the edge its removal created.
    std::map<std::pair<int, int>, int> cyc;
    cyc[norm_edge(a, b)] = 2;
    for (auto it2 = ears.rbegin(); it2 != ears.rend(); ++it2) {
        const auto& ear = *it2;
        auto f = cyc.find(norm_edge(ear[1], ear[2]));
        if (f == cyc.end()) return std::nullopt;
        if (--f->second == 0) cyc.erase(f);
        ++cyc[norm_edge(ear[1], ear[0])];
        ++cyc[norm_edge(ear[0], ear[2])];
    }

    std::set<std::pair<int, int>> real(edges.begin(), edges.end());
    std::map<int, std::vector<int>> cadj;
    for (const auto& [e, cnt] : cyc) {
        if (cnt != 1 || !real.count(e)) return std::nullopt;
        cadj[e.first].push_back(e.second);
        cadj[e.second].push_back(e.first);
    }
    if (cadj.size() != nb) return std::nullopt;
    for (const auto& [v, ns] : cadj)
        if (ns.size() != 2) return std::nullopt;

    std::vector<int> cycle = {verts.front()};
    int prev = verts.front();
    int cur = std::min(cadj[prev][0], cadj[prev][1]);
    while (cur != verts.front()) {
        cycle.push_back(cur);
        int nxt = cadj[cur][0] == prev ? cadj[cur][1] : cadj[cur][0];
        prev = cur;
        cur = nxt;
    }
    if (cycle.size() != nb) return std::nullopt;

    // Chords must nest around the cycle: close-before-open sweep; a chord
    // still buried when its right end comes up means two chords interleave.
    std::map<int, int> pos;
    for (size_t i = 0; i < cycle.size(); ++i) pos[cycle[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> chords;
    for (const auto& e : edges) {
        if (cyc.count(e)) continue;
        auto [pa, pb] = std::minmax(pos[e.first], pos[e.second]);
        chords.emplace_back(pa, pb);
    }
    std::sort(chords.begin(), chords.end(),
              [](const auto& l, const auto& r) {
                  return l.first != r.first ? l.first < r.first : l.second > r.second;
              });
    std::vector<int> endcount(nb, 0);
    for (const auto& c : chords) ++endcount[static_cast<size_t>(c.second)];
    std::vector<std::pair<int, int>> open;
    size_t ci = 0;
    for (int p = 0; p < static_cast<int>(nb); ++p) {
        while (!open.empty() && open.back().second == p) {
            --endcount[static_cast<size_t>(p)];
            open.pop_back();
        }
        if (endcount[static_cast<size_t>(p)] > 0) return std::nullopt;
        while (ci < chords.size() && chords[ci].first == p) open.push_back(chords[ci++]);
    }

    return PeelResult{std::move(cycle), std::move(ears)};
}

}  // namespace

std::optional<std::vector<Block>> outerplanar_blocks(const Graph& g) {
    int n = g.num_vertices();
    if (n >= 2 && g.num_edges() > 2 * n - 3) return std::nullopt;
    auto groups = biconnected_edge_groups(g);
    std::vector<Block> blocks;
    for (auto& grp : groups) {
        Block b;
        for (const auto& [u, v] : grp) b.edges.push_back(norm_edge(u, v));
        std::sort(b.edges.begin(), b.edges.end());
        for (const auto& [u, v] : b.edges) {
            b.vertices.push_back(u);
            b.vertices.push_back(v);
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        if (b.vertices.size() >= 3) {
            auto res = analyze_block(b.vertices, b.edges);
            if (!res) return std::nullopt;
            b.cycle = std::move(res->cycle);
        }
        blocks.push_back(std::move(b));
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& x, const Block& y) { return x.vertices < y.vertices; });
    return blocks;
}

bool is_outerplanar(const Graph& g) { return outerplanar_blocks(g).has_value(); }

bool is_maximal_outerplanar(const Graph& g) {
    int n = g.num_vertices();
    if (n < 3 || g.num_edges() != 2 * n - 3) return false;
    if (components(g).size() != 1) return false;
    return is_outerplanar(g);
}

std::vector<std::array<int, 3>> triangle_faces(const Graph& g) {
    if (!is_maximal_outerplanar(g)) throw std::invalid_argument("graph is not maximal outerplanar");
    std::vector<int> verts(static_cast<size_t>(g.num_vertices()));
    std::iota(verts.begin(), verts.end(), 1);
    auto res = analyze_block(verts, g.edges());
    if (!res) throw std::logic_error("maximal outerplanar block failed analysis");
    // In a triangulation every ear is an internal face and every internal
    // face appears as an ear exactly once.
    std::vector<std::array<int, 3>> faces;
    faces.reserve(res->ears.size());
    for (auto ear : res->ears) {
        std::sort(ear.begin(), ear.end());
        faces.push_back(ear);
    }
    std::sort(faces.begin(), faces.end());
    if (faces.size() != static_cast<size_t>(g.num_vertices() - 2))
        throw std::logic_error("unexpected face count");
    return faces;
}

std::vector<int> nice_labeling(const Graph& g) {
    auto blocks = outerplanar_blocks(g);
    if (!blocks) throw std::invalid_argument("graph is not outerplanar");
    if (components(g).size() != 1) throw std::invalid_argument("graph is disconnected");
    int n = g.num_vertices();
    std::vector<std::vector<int>> at(static_cast<size_t>(n) + 1);
    for (size_t i = 0; i < blocks->size(); ++i)
        for (int v : (*blocks)[i].vertices) at[static_cast<size_t>(v)].push_back(static_cast<int>(i));

    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    std::vector<char> used(blocks->size(), 0);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    auto emit = [&](int v) {
        if (!seen[static_cast<size_t>(v)]) {
            seen[static_cast<size_t>(v)] = 1;
            order.push_back(v);
        }
    };
    // Walk the block boundary from the entry toward its smaller neighbor.
    auto block_seq = [&](const Block& b, int entry) {
        if (b.vertices.size() == 2)
            return std::vector<int>{b.vertices[0] == entry ? b.vertices[1] : b.vertices[0]};
        const auto& cyc = b.cycle;
        size_t k = cyc.size(), at_i = 0;
        while (cyc[at_i] != entry) ++at_i;
        bool forward = cyc[(at_i + 1) % k] < cyc[(at_i + k - 1) % k];
        std::vector<int> seq;
        seq.reserve(k - 1);
        for (size_t s = 1; s < k; ++s) seq.push_back(cyc[(at_i + (forward ? s : k - s)) % k]);
        return seq;
    };

    struct Frame {
        bool vertex_frame;
        int v;
        size_t idx;
        std::vector<int> seq;
    };
    for (const auto& comp : components(g)) {
        std::vector<Frame> st;
        emit(comp[0]);
        st.push_back({true, comp[0], 0, {}});
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.vertex_frame) {
                const auto& bl = at[static_cast<size_t>(f.v)];
                while (f.idx < bl.size() && used[static_cast<size_t>(bl[f.idx])]) ++f.idx;
                if (f.idx == bl.size()) {
                    st.pop_back();
                    continue;
                }
                int bid = bl[f.idx++];
                used[static_cast<size_t>(bid)] = 1;
                st.push_back({false, f.v, 0, block_seq((*blocks)[static_cast<size_t>(bid)], f.v)});
            } else {
                if (f.idx == f.seq.size()) {
                    st.pop_back();
                    continue;
                }
                int w = f.seq[f.idx++];
                emit(w);
                st.push_back({true, w, 0, {}});
            }
        }
    }
    return order;
}

namespace {

std::vector<int> positions_of(const Graph& g, const std::vector<int>& order) {
    int n = g.num_vertices();
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("order has wrong length");
    std::vector<int> pos(static_cast<size_t>(n) + 1, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<size_t>(i)];
        if (v < 1 || v > n || pos[static_cast<size_t>(v)] != -1)
            throw std::invalid_argument("order is not a permutation of the vertices");
        pos[static_cast<size_t>(v)] = i;
    }
    return pos;
}

}  // namespace

std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> check_separation(
    const Graph& g, const std::vector<int>& order) {
    auto pos = positions_of(g, order);
    const auto& es = g.edges();
    for (const auto& [au, av] : es) {
        auto [lo, hi] = std::minmax(pos[static_cast<size_t>(au)], pos[static_cast<size_t>(av)]);
        for (const auto& [bu, bv] : es) {
            if (bu == au || bu == av || bv == au || bv == av) continue;
            bool in_u = pos[static_cast<size_t>(bu)] > lo && pos[static_cast<size_t>(bu)] < hi;
            bool in_v = pos[static_cast<size_t>(bv)] > lo && pos[static_cast<size_t>(bv)] < hi;
            if (in_u != in_v) return std::make_pair(std::make_pair(au, av), std::make_pair(bu, bv));
        }
    }
    return std::nullopt;
}

std::optional<SeparationViolation> check_path_separation(const Graph& g,
                                                         const std::vector<int>& order) {
    int n = g.num_vertices();
    auto pos = positions_of(g, order);
    for (const auto& [eu, ev] : g.edges()) {
        auto [lo, hi] = std::minmax(pos[static_cast<size_t>(eu)], pos[static_cast<size_t>(ev)]);
        std::vector<int> comp_id(static_cast<size_t>(n) + 1, 0);
        comp_id[static_cast<size_t>(eu)] = comp_id[static_cast<size_t>(ev)] = -1;
        for (int s = 1; s <= n; ++s) {
            if (comp_id[static_cast<size_t>(s)]) continue;
            std::vector<int> members = {s};
            comp_id[static_cast<size_t>(s)] = 1;
            for (size_t head = 0; head < members.size(); ++head)
                for (int w : g.neighbors(members[head]))
                    if (!comp_id[static_cast<size_t>(w)]) {
                        comp_id[static_cast<size_t>(w)] = 1;
                        members.push_back(w);
                    }
            int inside = -1, outside = -1;
            for (int v : members) {
                bool in = pos[static_cast<size_t>(v)] > lo && pos[static_cast<size_t>(v)] < hi;
                (in ? inside : outside) = v;
            }
            if (inside < 0 || outside < 0) continue;
            // BFS path from inside to outside within the component.
            std::map<int, int> from;
            from[inside] = 0;
            std::vector<int> queue = {inside};
            for (size_t head = 0; head < queue.size() && !from.count(outside); ++head)
                for (int w : g.neighbors(queue[head]))
                    if (w != eu && w != ev && !from.count(w)) {
                        from[w] = queue[head];
                        queue.push_back(w);
                    }
            std::vector<int> path;
            for (int v = outside; v != 0; v = from[v]) path.push_back(v);
            std::reverse(path.begin(), path.end());
            return SeparationViolation{{eu, ev}, std::move(path)};
        }
        // comp_id doubles as the visited marker, so reset is per edge.
    }
    return std::nullopt;
}

}  // namespace epg
