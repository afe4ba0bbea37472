#include "epg/cactus.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "epg/coord_axis.hpp"
#include "epg/generators.hpp"

namespace epg {

namespace {

// Biconnected components as edge lists, iterative so deep cacti don't blow
// the stack.
std::vector<std::vector<std::pair<int, int>>> biconnected_components(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> num(static_cast<size_t>(n) + 1, 0), low(static_cast<size_t>(n) + 1, 0);
    std::vector<int> parent(static_cast<size_t>(n) + 1, 0);
    std::vector<size_t> it(static_cast<size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int timer = 0;
    for (int s = 1; s <= n; ++s) {
        if (num[s]) continue;
        std::vector<int> stack = {s};
        num[s] = low[s] = ++timer;
        while (!stack.empty()) {
            int v = stack.back();
            const auto& nb = g.neighbors(v);
            if (it[v] < nb.size()) {
                int w = nb[it[v]++];
                if (w == parent[v]) continue;
                if (!num[w]) {
                    estack.emplace_back(v, w);
                    parent[w] = v;
                    num[w] = low[w] = ++timer;
                    stack.push_back(w);
                } else if (num[w] < num[v]) {
                    estack.emplace_back(v, w);
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) continue;
                int u = stack.back();
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= num[u]) {
                    std::vector<std::pair<int, int>> blk;
                    while (true) {
                        auto e = estack.back();
                        estack.pop_back();
                        blk.push_back(e);
                        if (e == std::pair<int, int>(u, v)) break;
                    }
                    blocks.push_back(std::move(blk));
                }
            }
        }
    }
    return blocks;
}

// Vertices of a cycle block in traversal order: smallest member first,
// heading toward its smaller neighbor.
std::vector<int> cycle_order(const std::vector<std::pair<int, int>>& blk) {
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : blk) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    int start = adj.begin()->first;
    std::vector<int> order = {start};
    int prev = start;
    int cur = std::min(adj[start][0], adj[start][1]);
    while (cur != start) {
        order.push_back(cur);
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
    }
    return order;
}

// Inside a block with more edges than vertices: a cycle plus an ear gives two
// cycles sharing a stretch of at least one edge.
std::pair<std::vector<int>, std::vector<int>> two_sharing_cycles(
    const std::vector<std::pair<int, int>>& blk) {
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : blk) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());

    // First cycle: shortest trip around the lex-smallest edge.
    auto [eu, ev] = *std::min_element(blk.begin(), blk.end(),
                                      [](std::pair<int, int> a, std::pair<int, int> b) {
                                          auto na = std::minmax(a.first, a.second);
                                          auto nb = std::minmax(b.first, b.second);
                                          return na < nb;
                                      });
    if (eu > ev) std::swap(eu, ev);
    std::map<int, int> from;
    std::deque<int> q = {eu};
    from[eu] = eu;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : adj[x]) {
            if (x == eu && y == ev) continue;
            if (!from.count(y)) {
                from[y] = x;
                q.push_back(y);
            }
        }
    }
    std::vector<int> cyc;
    for (int x = ev; x != eu; x = from[x]) cyc.push_back(x);
    cyc.push_back(eu);
    std::reverse(cyc.begin(), cyc.end());  // eu ... ev, closed by the edge

    std::set<int> on_cyc(cyc.begin(), cyc.end());
    std::set<std::pair<int, int>> cyc_edges;
    for (size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        cyc_edges.insert(std::minmax(a, b));
    }

    // Ear: leave the cycle at w through a non-cycle edge, run through
    // non-cycle vertices, re-enter at some w' != w.
    for (int w : cyc) {
        for (int x : adj[w]) {
            if (cyc_edges.count(std::minmax(w, x))) continue;
            std::vector<int> ear = {w};
            if (on_cyc.count(x)) {
                ear.push_back(x);
            } else {
                std::map<int, int> efrom;
                std::deque<int> eq = {x};
                efrom[x] = w;
                int hit = 0;
                while (!eq.empty() && !hit) {
                    int a = eq.front();
                    eq.pop_front();
                    for (int y : adj[a]) {
                        if (y == w || efrom.count(y)) continue;
                        efrom[y] = a;
                        if (on_cyc.count(y)) {
                            hit = y;
                            break;
                        }
                        eq.push_back(y);
                    }
                }
                if (!hit) continue;
                std::vector<int> back;
                for (int a = hit; a != w; a = efrom[a]) back.push_back(a);
                ear.insert(ear.end(), back.rbegin(), back.rend());
            }
            // Second cycle: the ear plus the cycle arc from w' back to w.
            size_t pw = std::find(cyc.begin(), cyc.end(), w) - cyc.begin();
            size_t pw2 = std::find(cyc.begin(), cyc.end(), ear.back()) - cyc.begin();
            std::vector<int> second = ear;
            for (size_t i = (pw2 + 1) % cyc.size(); i != pw; i = (i + 1) % cyc.size())
                second.push_back(cyc[i]);
            return {cyc, second};
        }
    }
    throw std::logic_error("overfull block without an ear");
}

}  // namespace

std::variant<CactusDecomposition, NotCactus> decompose_cactus(const Graph& g) {
    if (components(g).size() != 1)
        return NotCactus{"graph is disconnected", {}, {}};
    CactusDecomposition dec;
    for (const auto& blk : biconnected_components(g)) {
        std::set<int> verts;
        for (auto [a, b] : blk) {
            verts.insert(a);
            verts.insert(b);
        }
        if (blk.size() == 1) {
            auto [a, b] = blk.front();
            dec.bridges.push_back(std::minmax(a, b));
        } else if (blk.size() == verts.size()) {
            dec.cycles.push_back(cycle_order(blk));
        } else {
            auto [ca, cb] = two_sharing_cycles(blk);
            return NotCactus{"two cycles share an edge", ca, cb};
        }
    }
    std::sort(dec.bridges.begin(), dec.bridges.end());
    std::sort(dec.cycles.begin(), dec.cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return dec;
}

std::optional<Witness> is_mc_free(const Graph& g, const CactusDecomposition& dec) {
    for (const auto& cyc : dec.cycles)
        if (cyc.size() >= 4) return Witness{WitnessKind::CYCLE_GE4, cyc, -1};
    if (auto m = find_induced(g, gen_m2())) return Witness{WitnessKind::M2, *m, -1};
    if (auto m = find_induced(g, gen_m3())) return Witness{WitnessKind::M3, *m, -1};
    return std::nullopt;
}

EpgRepresentation build_b0_cactus(const Graph& g, const CactusDecomposition& dec) {
    for (const auto& cyc : dec.cycles)
        if (cyc.size() >= 4)
            throw std::invalid_argument("cactus has a long cycle; no bend-free representation");
    const int n = g.num_vertices();
    std::vector<std::set<int>> adj(static_cast<size_t>(n) + 1);
    for (auto [a, b] : g.edges()) {
        adj[a].insert(b);
        adj[b].insert(a);
    }

    // Peel triangle ears: repeatedly delete the smallest degree-2 vertex
    // whose neighbors are adjacent.
    auto ear = [&](int v) {
        if (adj[v].size() != 2) return false;
        int a = *adj[v].begin(), b = *std::next(adj[v].begin());
        return adj[a].count(b) > 0;
    };
    std::set<int> cand;
    for (int v = 1; v <= n; ++v)
        if (ear(v)) cand.insert(v);
    std::vector<std::array<int, 3>> peeled;
    std::vector<bool> gone(static_cast<size_t>(n) + 1, false);
    while (!cand.empty()) {
        int v = *cand.begin();
        cand.erase(cand.begin());
        if (!ear(v)) continue;
        int a = *adj[v].begin(), b = *std::next(adj[v].begin());
        peeled.push_back({v, a, b});
        gone[v] = true;
        adj[a].erase(v);
        adj[b].erase(v);
        adj[v].clear();
        for (int u : {a, b}) {
            if (ear(u))
                cand.insert(u);
            else
                cand.erase(u);
        }
    }

    std::vector<int> rem;
    size_t medges = 0;
    for (int v = 1; v <= n; ++v)
        if (!gone[v]) {
            rem.push_back(v);
            medges += adj[v].size();
        }
    medges /= 2;
    if (medges != rem.size() - 1)
        throw std::invalid_argument("cactus is not obstruction-free");

    // Interval spans on row 1, keyed by vertex.
    std::vector<std::pair<int, int>> span(static_cast<size_t>(n) + 1, {0, 0});
    std::map<int, int> cover;  // unit column -> paths covering it
    auto place = [&](int v, int lo, int hi) {
        span[v] = {lo, hi};
        for (int x = lo; x < hi; ++x) ++cover[x];
    };

    if (rem.size() <= 2) {
        for (int v : rem) place(v, 1, 2);
    } else {
        std::vector<std::vector<int>> leaves(static_cast<size_t>(n) + 1);
        std::vector<int> nonleaf;
        for (int v : rem) {
            if (adj[v].size() == 1)
                leaves[*adj[v].begin()].push_back(v);
            else
                nonleaf.push_back(v);
        }
        // The internal vertices of a caterpillar form a path.
        std::vector<int> spine;
        if (nonleaf.size() == 1) {
            spine = nonleaf;
        } else {
            std::set<int> internal(nonleaf.begin(), nonleaf.end());
            std::vector<int> ends;
            for (int v : nonleaf) {
                int d = 0;
                for (int u : adj[v])
                    if (internal.count(u)) ++d;
                if (d > 2) throw std::invalid_argument("cactus is not obstruction-free");
                if (d <= 1) ends.push_back(v);
            }
            if (ends.size() != 2)
                throw std::invalid_argument("cactus is not obstruction-free");
            int prev = 0, cur = std::min(ends[0], ends[1]);
            while (cur) {
                spine.push_back(cur);
                int nxt = 0;
                for (int u : adj[cur])
                    if (internal.count(u) && u != prev) nxt = u;
                prev = spine.back();
                cur = nxt;
            }
            if (spine.size() != nonleaf.size())
                throw std::invalid_argument("cactus is not obstruction-free");
        }
        const int k = static_cast<int>(spine.size());
        int s = 1;
        for (int i = 0; i < k; ++i) {
            int v = spine[i];
            int L = static_cast<int>(leaves[v].size());
            int e = s + (i > 0 ? 1 : 0) + L + (i + 1 < k ? 1 : 0);
            place(v, s, e);
            int p = s + (i > 0 ? 1 : 0);
            std::sort(leaves[v].begin(), leaves[v].end());
            for (int w : leaves[v]) {
                place(w, p, p + 1);
                ++p;
            }
            s = e - 1;
        }
    }

    // Redraw peeled ears in reverse order: one grid edge inside the overlap
    // of the two neighbors, untouched by anyone else.
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        auto [v, a, b] = *it;
        int lo = std::max(span[a].first, span[b].first);
        int hi = std::min(span[a].second, span[b].second);
        int got = 0;
        for (int x = lo; x < hi && !got; ++x)
            if (cover[x] == 2) got = x + 1;
        if (!got) throw std::logic_error("triangle ear has no private overlap edge");
        place(v, got - 1, got);
    }

    EpgRepresentation rep;
    for (int v = 1; v <= n; ++v)
        rep.paths.emplace(v, GridPath({{span[v].first, 1}, {span[v].second, 1}}));
    return rep;
}

namespace {

using Corner = std::pair<CoordAxis::Handle, CoordAxis::Handle>;

// A free stretch of a drawn path: children hook on between cursor and bound.
// Horizontal zones sit on a row, vertical ones on a column.
struct Zone {
    CoordAxis::Handle line;
    bool vertical;
    CoordAxis::Handle cursor;
    CoordAxis::Handle bound;
};

struct B1mBuilder {
    CoordAxis rows, cols;
    std::vector<std::vector<Corner>> corners;
    std::vector<Zone> zone;

    explicit B1mBuilder(int n)
        : corners(static_cast<size_t>(n) + 1), zone(static_cast<size_t>(n) + 1) {}

    CoordAxis& long_axis(const Zone& z) { return z.vertical ? rows : cols; }
    CoordAxis& cross_axis(const Zone& z) { return z.vertical ? cols : rows; }
    Corner at(const Zone& z, CoordAxis::Handle lng, CoordAxis::Handle crs) {
        return z.vertical ? Corner{crs, lng} : Corner{lng, crs};
    }
};

}  // namespace

EpgRepresentation build_b1m_cactus(const Graph& g, const CactusDecomposition& dec) {
    const int n = g.num_vertices();
    B1mBuilder bld(n);

    std::vector<std::vector<int>> bradj(static_cast<size_t>(n) + 1);
    for (auto [a, b] : dec.bridges) {
        bradj[a].push_back(b);
        bradj[b].push_back(a);
    }
    for (auto& v : bradj) std::sort(v.begin(), v.end());
    std::vector<std::vector<size_t>> vcycles(static_cast<size_t>(n) + 1);
    for (size_t ci = 0; ci < dec.cycles.size(); ++ci)
        for (int v : dec.cycles[ci]) vcycles[v].push_back(ci);
    std::vector<bool> used(dec.cycles.size(), false);
    std::vector<bool> placed(static_cast<size_t>(n) + 1, false);

    // Root path: a straight segment on the first row.
    auto L0 = bld.rows.push_back();
    auto xa = bld.cols.push_back();
    auto xb = bld.cols.push_back();
    bld.corners[1] = {{xa, L0}, {xb, L0}};
    bld.zone[1] = {L0, false, xa, xb};
    placed[1] = true;

    std::deque<int> queue = {1};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        Zone& z = bld.zone[v];
        auto& lng = bld.long_axis(z);
        auto& crs = bld.cross_axis(z);
        auto drop = [&](int u, std::vector<Corner> cs, Zone uz) {
            bld.corners[u] = std::move(cs);
            bld.zone[u] = uz;
            placed[u] = true;
            queue.push_back(u);
        };

        for (int u : bradj[v]) {
            if (placed[u]) continue;
            auto g1 = lng.insert_after(z.cursor);
            auto g2 = lng.insert_after(g1);
            auto T = crs.insert_after(z.line);
            drop(u, {bld.at(z, g1, z.line), bld.at(z, g2, z.line), bld.at(z, g2, T)},
                 {g2, !z.vertical, z.line, T});
            z.cursor = g2;
        }

        for (size_t ci : vcycles[v]) {
            if (used[ci]) continue;
            used[ci] = true;
            const auto& cyc = dec.cycles[ci];
            const size_t len = cyc.size();
            // Walk the cycle from v toward its smaller neighbor.
            long pv = std::find(cyc.begin(), cyc.end(), v) - cyc.begin();
            long m = static_cast<long>(len);
            int step = cyc[(pv + 1) % m] < cyc[(pv + m - 1) % m] ? 1 : -1;
            std::vector<int> u;  // the other members, in traversal order
            for (long j = 1; j < m; ++j) u.push_back(cyc[((pv + step * j) % m + m) % m]);

            if (len == 3) {
                auto f1 = lng.insert_after(z.cursor);
                auto f2 = lng.insert_after(f1);
                auto f3 = lng.insert_after(f2);
                auto f4 = lng.insert_after(f3);
                auto T1 = crs.insert_after(z.line);
                auto T2 = crs.insert_after(z.line);
                drop(u[0], {bld.at(z, f1, z.line), bld.at(z, f3, z.line), bld.at(z, f3, T1)},
                     {f3, !z.vertical, z.line, T1});
                drop(u[1], {bld.at(z, f2, z.line), bld.at(z, f4, z.line), bld.at(z, f4, T2)},
                     {f4, !z.vertical, z.line, T2});
                z.cursor = f4;
            } else if (len == 4) {
                auto f1 = lng.insert_after(z.cursor);
                auto c = lng.insert_after(f1);
                auto x3 = lng.insert_after(c);
                auto x2 = lng.insert_after(x3);
                auto b3 = crs.insert_before(z.line);
                auto b2 = crs.insert_before(z.line);
                auto m2 = crs.insert_after(z.line);
                auto T1 = crs.insert_after(m2);
                drop(u[0], {bld.at(z, f1, z.line), bld.at(z, c, z.line), bld.at(z, c, T1)},
                     {c, !z.vertical, m2, T1});
                drop(u[1], {bld.at(z, c, b2), bld.at(z, c, m2), bld.at(z, x2, m2)},
                     {m2, z.vertical, c, x2});
                drop(u[2], {bld.at(z, c, b3), bld.at(z, c, z.line), bld.at(z, x3, z.line)},
                     {c, !z.vertical, b3, b2});
                z.cursor = x2;
            } else {
                auto s2 = crs.insert_after(z.line);
                auto r2 = crs.insert_after(s2);
                auto t2 = crs.insert_after(r2);
                auto T2 = crs.insert_after(t2);
                auto T1 = crs.insert_after(T2);
                auto f1 = lng.insert_after(z.cursor);
                auto c1 = lng.insert_after(f1);
                drop(u[0], {bld.at(z, f1, z.line), bld.at(z, c1, z.line), bld.at(z, c1, T1)},
                     {c1, !z.vertical, r2, T1});
                auto e = lng.insert_after(c1);
                drop(u[1], {bld.at(z, c1, s2), bld.at(z, c1, r2), bld.at(z, e, r2)},
                     {r2, z.vertical, c1, e});
                for (size_t j = 2; j + 2 < len - 1; ++j) {
                    auto sj = lng.insert_before(e);
                    auto ej = lng.insert_after(e);
                    drop(u[j], {bld.at(z, sj, r2), bld.at(z, ej, r2)}, {r2, z.vertical, e, ej});
                    e = ej;
                }
                auto sl = lng.insert_before(e);
                auto c2 = lng.insert_after(e);
                drop(u[len - 3], {bld.at(z, sl, r2), bld.at(z, c2, r2), bld.at(z, c2, t2)},
                     {r2, z.vertical, e, c2});
                auto f2 = lng.insert_before(c2);
                drop(u[len - 2], {bld.at(z, f2, z.line), bld.at(z, c2, z.line), bld.at(z, c2, T2)},
                     {c2, !z.vertical, t2, T2});
                z.cursor = c2;
            }
        }
    }

    bld.rows.finalize();
    bld.cols.finalize();
    EpgRepresentation rep;
    for (int v = 1; v <= n; ++v) {
        if (!placed[v]) throw std::logic_error("vertex never reached by the traversal");
        std::vector<GridPoint> pts;
        for (auto [cx, cy] : bld.corners[v]) pts.push_back({*cx, *cy});
        rep.paths.emplace(v, GridPath(pts));
    }
    return rep;
}

CactusClassification classify_cactus(const Graph& g) {
    auto d = decompose_cactus(g);
    if (std::holds_alternative<NotCactus>(d))
        throw std::invalid_argument("not a cactus: " + std::get<NotCactus>(d).reason);
    const auto& dec = std::get<CactusDecomposition>(d);
    auto w = is_mc_free(g, dec);
    if (!w) return {0, 0, std::nullopt};
    return {1, 1, std::move(w)};
}

}  // namespace epg
