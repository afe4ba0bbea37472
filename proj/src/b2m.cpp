#include <epg/b2m.hpp>

#include <epg/coord_axis.hpp>
#include <epg/embedding.hpp>

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace epg {

namespace {

// Free stretch of a path's lower segment: hooks for later neighbors land
// strictly between cursor and bound on row `row`.
struct Region {
    CoordAxis::Handle row;
    CoordAxis::Handle cursor;
    CoordAxis::Handle bound;
};

using Corner = std::pair<CoordAxis::Handle, CoordAxis::Handle>;

// Lays out one connected component into the shared axes. `orig` maps the
// component's 1..k vertex ids back to ids of the input graph.
void build_component(const Graph& sub, const std::vector<int>& orig, CoordAxis& rows,
                     CoordAxis& cols, std::vector<std::pair<int, std::vector<Corner>>>& out) {
    const int n = sub.num_vertices();
    const std::vector<int> order = nice_labeling(sub);

    std::vector<int> label(n + 1, 0);
    for (int k = 0; k < n; ++k) label[order[k]] = k + 1;

    // Mutable adjacency in label space; realized edges are removed so that
    // every edge is drawn exactly once.
    std::vector<std::set<int>> adj(n + 1);
    for (auto [a, b] : sub.edges()) {
        adj[label[a]].insert(label[b]);
        adj[label[b]].insert(label[a]);
    }

    std::vector<Region> region(n + 1);
    std::vector<std::vector<Corner>> corners(n + 1);
    std::set<int> greens;

    auto erase_edge = [&adj](int a, int b) {
        adj[a].erase(b);
        adj[b].erase(a);
    };

    {
        // Label 1 starts as a bare horizontal segment.
        auto r = rows.push_back();
        auto x0 = cols.push_back();
        auto x1 = cols.push_back();
        corners[1] = {{x0, r}, {x1, r}};
        region[1] = {r, x0, x1};
        greens.insert(1);
    }

    for (int i = 1; i <= n; ++i) {
        greens.erase(i);
        const int istar = greens.empty() ? 0 : *greens.begin();

        const std::vector<int> nb(adj[i].begin(), adj[i].end());
        const int l = static_cast<int>(nb.size());
        const auto ri = region[i].row;
        for (int j = 1; j <= l; ++j) {
            const int u = nb[j - 1];
            if (j < l) {
                // Hook below v_i's segment, rising onto it.
                auto ru = rows.insert_before(ri);
                auto a = cols.insert_after(region[i].cursor);
                auto c = cols.insert_after(a);
                CoordAxis::Handle e;
                if (j > 1 && adj[nb[j - 2]].count(u)) {
                    // Adjacent consecutive neighbors: stretch the previous
                    // hook's top segment past this riser.
                    auto ext = cols.insert_after(c);
                    corners[nb[j - 2]].back().first = ext;
                    e = cols.insert_after(ext);
                } else {
                    e = cols.insert_after(c);
                }
                corners[u] = {{a, ru}, {c, ru}, {c, ri}, {e, ri}};
                region[u] = {ru, a, c};
                region[i].cursor = e;
            } else {
                // Last neighbor continues on v_i's own row.
                CoordAxis::Handle s;
                if (l > 1 && adj[nb[l - 2]].count(u))
                    s = cols.insert_before(region[i].cursor);
                else
                    s = cols.insert_after(region[i].cursor);
                if (istar == 0 || !adj[u].count(istar)) {
                    auto bnd = region[i].bound;
                    auto e = cols.insert_after(bnd);
                    corners[u] = {{s, ri}, {e, ri}};
                    region[u] = {ri, bnd, e};
                } else {
                    // u is also adjacent to the second smallest green: rise
                    // into that region and land on its row.
                    auto c = cols.insert_after(region[istar].cursor);
                    auto e2 = cols.insert_after(c);
                    region[istar].cursor = e2;
                    const auto rstar = region[istar].row;
                    corners[u] = {{s, ri}, {c, ri}, {c, rstar}, {e2, rstar}};
                    region[u] = {ri, region[i].bound, c};
                }
            }
            greens.insert(u);
        }
        for (int u : nb) erase_edge(i, u);
        for (int j = 0; j + 1 < l; ++j) erase_edge(nb[j], nb[j + 1]);
        if (l > 0 && istar != 0) erase_edge(nb[l - 1], istar);
    }

    for (int i = 1; i <= n; ++i)
        out.emplace_back(orig[static_cast<size_t>(order[i - 1]) - 1], std::move(corners[i]));
}

}  // namespace

EpgRepresentation build_b2m(const Graph& g) {
    if (!is_outerplanar(g)) throw std::invalid_argument("graph is not outerplanar");

    CoordAxis rows, cols;
    std::vector<std::pair<int, std::vector<Corner>>> built;
    std::vector<int> idx(static_cast<size_t>(g.num_vertices()) + 1, 0);
    for (const auto& comp : components(g)) {
        for (size_t t = 0; t < comp.size(); ++t) idx[static_cast<size_t>(comp[t])] = static_cast<int>(t) + 1;
        std::vector<std::pair<int, int>> es;
        for (auto [a, b] : g.edges())
            if (idx[static_cast<size_t>(a)] && idx[static_cast<size_t>(b)])
                es.emplace_back(idx[static_cast<size_t>(a)], idx[static_cast<size_t>(b)]);
        build_component(Graph::from_edges(static_cast<int>(comp.size()), es), comp, rows, cols,
                        built);
        for (int v : comp) idx[static_cast<size_t>(v)] = 0;
    }

    rows.finalize();
    cols.finalize();
    EpgRepresentation rep;
    for (auto& [v, cs] : built) {
        std::vector<GridPoint> pts;
        pts.reserve(cs.size());
        for (auto& [cx, ry] : cs) pts.push_back({*cx, *ry});
        rep.paths.emplace(v, GridPath(pts));
    }
    return compact(rep);
}

EpgRepresentation build_nsun_b2m(int n) {
    if (n < 3) throw std::invalid_argument("n-sun requires n >= 3");
    EpgRepresentation rep;
    for (int i = 1; i <= n; ++i)
        rep.paths.emplace(i, GridPath({{1, 0}, {1, i}, {2 * n + 2, i}}));
    for (int i = 1; i < n; ++i)
        rep.paths.emplace(n + i, GridPath({{2 * i - 1, i},
                                           {2 * i, i},
                                           {2 * i, i + 1},
                                           {2 * i + 1, i + 1}}));
    rep.paths.emplace(2 * n, GridPath({{2 * n - 1, 1},
                                       {2 * n, 1},
                                       {2 * n, n},
                                       {2 * n + 1, n}}));
    return rep;
}

}  // namespace epg
