#include <epg/maxouterplanar.hpp>

#include <epg/coord_axis.hpp>
#include <epg/embedding.hpp>
#include <epg/generators.hpp>

#include <algorithm>
#include <climits>
#include <deque>
#include <set>
#include <stdexcept>

namespace epg {

namespace {

// The two vertices on the edge shared by neighboring faces, ascending.
std::pair<int, int> shared_pair(const DualTree& dual, int f, int h) {
    std::vector<int> s;
    for (int x : dual.faces[static_cast<size_t>(f) - 1])
        for (int y : dual.faces[static_cast<size_t>(h) - 1])
            if (x == y) s.push_back(x);
    if (s.size() != 2) throw std::logic_error("dual neighbors must share exactly one edge");
    return {s[0], s[1]};
}

int third_vertex(const std::array<int, 3>& t, int p, int q) {
    for (int x : t)
        if (x != p && x != q) return x;
    throw std::logic_error("degenerate face");
}

}  // namespace

DualTree almost_dual(const Graph& g) {
    DualTree d;
    d.faces = triangle_faces(g);
    const int F = d.num_faces();
    d.adj.assign(static_cast<size_t>(F) + 1, {});
    std::map<std::pair<int, int>, int> seen_edge;  // face that first covered the edge
    int links = 0;
    for (int f = 1; f <= F; ++f) {
        const auto& t = d.faces[static_cast<size_t>(f) - 1];
        const std::pair<int, int> sides[3] = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
        for (const auto& e : sides) {
            auto [it, fresh] = seen_edge.try_emplace(e, f);
            if (!fresh) {
                d.adj[static_cast<size_t>(f)].push_back(it->second);
                d.adj[static_cast<size_t>(it->second)].push_back(f);
                ++links;
            }
        }
    }
    if (F > 0 && links != F - 1) throw std::logic_error("inner dual is not a tree");
    for (auto& v : d.adj) std::sort(v.begin(), v.end());
    return d;
}

std::vector<int> s3_centers(const DualTree& dual) {
    std::vector<int> out;
    for (int f = 1; f <= dual.num_faces(); ++f)
        if (dual.degree(f) == 3) out.push_back(f);
    return out;
}

ReducedGraph reduced_graph(const Graph& g, const DualTree& dual) {
    ReducedGraph out;
    std::set<std::pair<int, int>> es;
    std::set<int> kept;
    for (int f : s3_centers(dual)) {
        const auto& t = dual.faces[static_cast<size_t>(f) - 1];
        out.triangles.push_back(t);
        es.insert({t[0], t[1]});
        es.insert({t[0], t[2]});
        es.insert({t[1], t[2]});
        kept.insert(t.begin(), t.end());
    }
    out.graph = Graph::from_edges(g.num_vertices(),
                                  std::vector<std::pair<int, int>>(es.begin(), es.end()));
    out.kept_vertices.assign(kept.begin(), kept.end());
    return out;
}

std::variant<Assignment, NotMFree> compute_assignment(const Graph& g, const DualTree& dual) {
    (void)g;
    const auto centers = s3_centers(dual);
    Assignment asg;
    std::set<int> unserved(centers.begin(), centers.end());
    const std::set<int> is_center(centers.begin(), centers.end());

    auto tri = [&](int f) -> const std::array<int, 3>& {
        return dual.faces[static_cast<size_t>(f) - 1];
    };
    auto claimed = [&](int x) { return asg.delta.count(x) != 0; };
    auto serve = [&](int f, int excluded, int lvl) {
        int p = 0, q = 0;
        for (int x : tri(f))
            if (x != excluded) (p ? q : p) = x;
        asg.assigned[f] = {p, q};
        asg.level[f] = lvl;
        asg.delta[p] = f;
        asg.delta[q] = f;
        unserved.erase(f);
    };
    auto stop = [&](int site, std::vector<int> duals) {
        std::sort(duals.begin(), duals.end());
        duals.erase(std::unique(duals.begin(), duals.end()), duals.end());
        return NotMFree{site, std::move(duals)};
    };

    // Neighbored central faces claim their diamond outright. A clash here
    // means a second diamond already reached one of the two triangles.
    for (int f : centers) {
        if (!unserved.count(f)) continue;
        int partner = 0;
        for (int h : dual.adj[static_cast<size_t>(f)])
            if (is_center.count(h)) {
                partner = h;
                break;
            }
        if (!partner) continue;
        for (int x : tri(f))
            if (claimed(x)) return stop(1, {f, partner, asg.delta[x]});
        for (int x : tri(partner))
            if (claimed(x)) return stop(1, {f, partner, asg.delta[x]});
        auto [a, b] = shared_pair(dual, f, partner);
        serve(f, b, 0);
        serve(partner, a, 0);
    }

    while (!unserved.empty()) {
        // Propagate along touching triangles: a face one of whose vertices
        // is already claimed must spare exactly that vertex.
        bool advanced = true;
        while (advanced) {
            advanced = false;
            for (int f : unserved) {
                int a = 0, best = INT_MAX;
                for (int x : tri(f))
                    if (claimed(x) && asg.level.at(asg.delta.at(x)) < best) {
                        a = x;
                        best = asg.level.at(asg.delta.at(x));
                    }
                if (!a) continue;
                for (int x : tri(f))
                    if (x != a && claimed(x)) return stop(2, {f, asg.delta[a], asg.delta[x]});
                serve(f, a, best + 1);
                advanced = true;
                break;
            }
        }
        if (!unserved.empty()) {
            // Fresh region: spare the smallest vertex of the smallest face.
            const int f = *unserved.begin();
            serve(f, tri(f)[0], 0);
        }
    }
    return asg;
}

Witness find_m_obstruction(const ReducedGraph& rg) {
    if (auto m = find_induced(rg.graph, gen_m1())) return {WitnessKind::M1, *m, -1};
    const int n = rg.graph.num_vertices();
    for (int ell = 0; 2 * ell + 7 <= n; ++ell)
        for (bool da : {false, true})
            for (bool db : {false, true})
                if (auto m = find_induced(rg.graph, gen_m1_ell_variant(ell, da, db)))
                    return {WitnessKind::M1_ELL, *m, ell};
    throw std::logic_error("assignment got stuck but no obstruction was found");
}

EpgRepresentation build_b0(const Graph& g, const DualTree& dual) {
    const int F = dual.num_faces();
    for (int f = 1; f <= F; ++f)
        if (dual.degree(f) > 2)
            throw std::invalid_argument("graph contains a sun copy; no bend-free representation");

    // Walk the dual path from the endpoint with the lex smaller face.
    int start = 1;
    if (F > 1) {
        std::vector<int> ends;
        for (int f = 1; f <= F; ++f)
            if (dual.degree(f) == 1) ends.push_back(f);
        if (ends.size() != 2) throw std::logic_error("dual path must have two endpoints");
        start = dual.faces[static_cast<size_t>(ends[0]) - 1] <=
                        dual.faces[static_cast<size_t>(ends[1]) - 1]
                    ? ends[0]
                    : ends[1];
    }
    std::vector<int> pos(static_cast<size_t>(F) + 1, 0);
    for (int prev = 0, cur = start, p = 1; cur; ++p) {
        pos[static_cast<size_t>(cur)] = p;
        int nxt = 0;
        for (int h : dual.adj[static_cast<size_t>(cur)])
            if (h != prev) nxt = h;
        prev = cur;
        cur = nxt;
    }

    const int n = g.num_vertices();
    std::vector<int> mn(static_cast<size_t>(n) + 1, INT_MAX), mx(static_cast<size_t>(n) + 1, 0);
    for (int f = 1; f <= F; ++f)
        for (int v : dual.faces[static_cast<size_t>(f) - 1]) {
            mn[static_cast<size_t>(v)] = std::min(mn[static_cast<size_t>(v)], pos[static_cast<size_t>(f)]);
            mx[static_cast<size_t>(v)] = std::max(mx[static_cast<size_t>(v)], pos[static_cast<size_t>(f)]);
        }
    EpgRepresentation rep;
    for (int v = 1; v <= n; ++v)
        rep.paths.emplace(v, GridPath({{mn[static_cast<size_t>(v)], 1},
                                       {mx[static_cast<size_t>(v)] + 1, 1}}));
    return rep;
}

namespace {

// A face is drawn along a line of the grid; the frame says which line, and
// in which direction fresh coordinates are allocated.
struct Frame {
    CoordAxis::Handle line;  // row when horizontal, column when vertical
    bool vertical = false;
    int dir = +1;
};

using Corner = std::pair<CoordAxis::Handle, CoordAxis::Handle>;  // (column, row)

struct B1Builder {
    CoordAxis rows, cols;
    std::vector<std::deque<Corner>> corners;

    explicit B1Builder(int n) : corners(static_cast<size_t>(n) + 1) {}

    CoordAxis& long_axis(const Frame& fr) { return fr.vertical ? rows : cols; }
    CoordAxis& cross_axis(const Frame& fr) { return fr.vertical ? cols : rows; }

    Corner corner(const Frame& fr, CoordAxis::Handle lng, CoordAxis::Handle crs) {
        return fr.vertical ? Corner{crs, lng} : Corner{lng, crs};
    }
    Corner at(const Frame& fr, CoordAxis::Handle lng) { return corner(fr, lng, fr.line); }
    CoordAxis::Handle long_of(const Frame& fr, const Corner& c) {
        return fr.vertical ? c.second : c.first;
    }

    CoordAxis::Handle advance(const Frame& fr, CoordAxis::Handle from) {
        return fr.dir > 0 ? long_axis(fr).insert_after(from) : long_axis(fr).insert_before(from);
    }
    CoordAxis::Handle lateral(const Frame& fr, int side) {
        return side > 0 ? cross_axis(fr).insert_after(fr.line)
                        : cross_axis(fr).insert_before(fr.line);
    }

    // INVARIANT: both pair paths end exactly at the claw's frontier corner.
    bool at_front(int v, const Corner& c) {
        auto& dq = corners[static_cast<size_t>(v)];
        if (dq.front() == c) return true;
        if (dq.back() == c) return false;
        throw std::logic_error("path end is not at the frontier");
    }
    void extend_straight(int v, const Corner& from, const Corner& to) {
        auto& dq = corners[static_cast<size_t>(v)];
        (at_front(v, from) ? dq.front() : dq.back()) = to;
    }
    void extend_bend(int v, const Corner& from, const Corner& turn, const Corner& to) {
        auto& dq = corners[static_cast<size_t>(v)];
        if (at_front(v, from)) {
            dq.front() = turn;
            dq.push_front(to);
        } else {
            dq.back() = turn;
            dq.push_back(to);
        }
    }
};

}  // namespace

EpgRepresentation build_b1(const Graph& g, const DualTree& dual, const Assignment& asg) {
    const int F = dual.num_faces();
    if (F == 0) throw std::invalid_argument("graph has no triangular face");
    if (F == 1) {
        // A single face: all three paths share one unit edge.
        EpgRepresentation rep;
        for (int v : dual.faces[0]) rep.paths.emplace(v, GridPath({{1, 1}, {2, 1}}));
        return rep;
    }

    B1Builder bld(g.num_vertices());

    struct Item {
        int face;
        int from;
        int a, b;  // shared pair; both paths end at the frontier
        Frame fr;
        Corner frontier;
    };
    std::deque<Item> work;

    int start = 0;
    for (int f = 1; f <= F && !start; ++f)
        if (dual.degree(f) == 1) start = f;
    const int entry = dual.adj[static_cast<size_t>(start)][0];
    const auto [a0, b0] = shared_pair(dual, start, entry);
    const int c0 = third_vertex(dual.faces[static_cast<size_t>(start) - 1], a0, b0);

    Frame base{bld.rows.push_back(), false, +1};
    auto x0 = bld.cols.push_back();
    auto x1 = bld.cols.push_back();
    auto x2 = bld.cols.push_back();
    bld.corners[static_cast<size_t>(c0)] = {bld.at(base, x0), bld.at(base, x1)};
    bld.corners[static_cast<size_t>(a0)] = {bld.at(base, x0), bld.at(base, x2)};
    bld.corners[static_cast<size_t>(b0)] = {bld.at(base, x0), bld.at(base, x2)};
    work.push_back({entry, start, a0, b0, base, bld.at(base, x2)});

    while (!work.empty()) {
        const Item it = work.front();
        work.pop_front();
        const int u = it.face;
        const int d = third_vertex(dual.faces[static_cast<size_t>(u) - 1], it.a, it.b);
        std::vector<int> kids;
        for (int h : dual.adj[static_cast<size_t>(u)])
            if (h != it.from) kids.push_back(h);

        if (kids.empty()) {
            const auto c1 = bld.advance(it.fr, bld.long_of(it.fr, it.frontier));
            const auto c2 = bld.advance(it.fr, c1);
            bld.extend_straight(it.a, it.frontier, bld.at(it.fr, c2));
            bld.extend_straight(it.b, it.frontier, bld.at(it.fr, c2));
            bld.corners[static_cast<size_t>(d)] = {bld.at(it.fr, c1), bld.at(it.fr, c2)};
        } else if (kids.size() == 1) {
            const auto sh = shared_pair(dual, u, kids[0]);
            if (sh.first != d && sh.second != d)
                throw std::logic_error("chain face must pass its new vertex on");
            const int ap = (sh.first == it.a || sh.second == it.a) ? it.a : it.b;
            const int bp = (ap == it.a) ? it.b : it.a;
            const auto c1 = bld.advance(it.fr, bld.long_of(it.fr, it.frontier));
            const auto c2 = bld.advance(it.fr, c1);
            const auto c3 = bld.advance(it.fr, c2);
            bld.extend_straight(bp, it.frontier, bld.at(it.fr, c2));
            bld.extend_straight(ap, it.frontier, bld.at(it.fr, c3));
            bld.corners[static_cast<size_t>(d)] = {bld.at(it.fr, c1), bld.at(it.fr, c3)};
            work.push_back({kids[0], u, std::min(ap, d), std::max(ap, d), it.fr,
                            bld.at(it.fr, c3)});
        } else if (kids.size() == 2) {
            const auto pr = asg.assigned.find(u);
            if (pr == asg.assigned.end())
                throw std::invalid_argument("degree-3 dual node lacks an assignment");
            // Each child is reached through one vertex of the incoming pair.
            std::pair<int, int> via[2];
            for (int k = 0; k < 2; ++k) {
                const auto sh = shared_pair(dual, u, kids[static_cast<size_t>(k)]);
                if (sh.first != d && sh.second != d)
                    throw std::logic_error("branch face must pass its new vertex on");
                via[k] = {kids[static_cast<size_t>(k)], sh.first == d ? sh.second : sh.first};
            }
            const auto pick_kids = [&](int ap_v, int bp_v) {
                int wa = 0, wb = 0;
                for (const auto& [kid, through] : via) {
                    if (through == ap_v) wa = kid;
                    if (through == bp_v) wb = kid;
                }
                if (!wa || !wb) throw std::logic_error("branch faces do not match the pair");
                return std::pair<int, int>{wa, wb};
            };
            const auto [p, q] = pr->second;
            const bool pair_assigned =
                (std::min(p, q) == std::min(it.a, it.b) && std::max(p, q) == std::max(it.a, it.b));
            if (pair_assigned) {
                // Both incoming paths bend away; the new path crosses the line.
                const int ap = std::min(it.a, it.b), bp = std::max(it.a, it.b);
                const auto r = bld.advance(it.fr, bld.long_of(it.fr, it.frontier));
                const auto lam = bld.lateral(it.fr, -1);
                const auto mu = bld.lateral(it.fr, +1);
                const Corner turn = bld.at(it.fr, r);
                bld.extend_bend(ap, it.frontier, turn, bld.corner(it.fr, r, lam));
                bld.extend_bend(bp, it.frontier, turn, bld.corner(it.fr, r, mu));
                bld.corners[static_cast<size_t>(d)] = {bld.corner(it.fr, r, lam),
                                                       bld.corner(it.fr, r, mu)};
                const auto [wa, wb] = pick_kids(ap, bp);
                const Frame down{r, !it.fr.vertical, -1};
                const Frame up{r, !it.fr.vertical, +1};
                work.push_back({wa, u, std::min(ap, d), std::max(ap, d), down,
                                bld.corner(it.fr, r, lam)});
                work.push_back({wb, u, std::min(bp, d), std::max(bp, d), up,
                                bld.corner(it.fr, r, mu)});
            } else {
                // One incoming path and the new one bend; the other incoming
                // path keeps the line for its own branch.
                int ap;
                if (p == d && (q == it.a || q == it.b))
                    ap = q;
                else if (q == d && (p == it.a || p == it.b))
                    ap = p;
                else
                    throw std::invalid_argument("assignment inconsistent with its face");
                const int bp = (ap == it.a) ? it.b : it.a;
                const auto c1 = bld.advance(it.fr, bld.long_of(it.fr, it.frontier));
                const auto c2 = bld.advance(it.fr, c1);
                const auto lam = bld.lateral(it.fr, -1);
                bld.extend_straight(bp, it.frontier, bld.at(it.fr, c2));
                bld.extend_bend(ap, it.frontier, bld.at(it.fr, c1), bld.corner(it.fr, c1, lam));
                bld.corners[static_cast<size_t>(d)] = {bld.corner(it.fr, c1, lam),
                                                       bld.at(it.fr, c1), bld.at(it.fr, c2)};
                const auto [wa, wb] = pick_kids(ap, bp);
                const Frame side{c1, !it.fr.vertical, -1};
                work.push_back({wa, u, std::min(ap, d), std::max(ap, d), side,
                                bld.corner(it.fr, c1, lam)});
                work.push_back({wb, u, std::min(bp, d), std::max(bp, d), it.fr,
                                bld.at(it.fr, c2)});
            }
        } else {
            throw std::logic_error("dual node of degree four or more");
        }
    }

    bld.rows.finalize();
    bld.cols.finalize();
    EpgRepresentation rep;
    for (int v = 1; v <= g.num_vertices(); ++v) {
        const auto& dq = bld.corners[static_cast<size_t>(v)];
        if (dq.empty()) throw std::logic_error("vertex missing from every face");
        std::vector<GridPoint> pts;
        pts.reserve(dq.size());
        for (const auto& [cx, ry] : dq) pts.push_back({*cx, *ry});
        rep.paths.emplace(v, GridPath(std::move(pts)));
    }
    return compact(rep);
}

MaxOutClassification classify_max_outerplanar(const Graph& g) {
    const DualTree dual = almost_dual(g);
    const auto centers = s3_centers(dual);
    MaxOutClassification out;
    if (centers.empty()) {
        out.b = 0;
        out.bm = 0;
        return out;
    }
    out.bm = 2;
    {
        // Sun witness read off the first central face: hubs are the face,
        // rays are the apexes of its three neighbors.
        const int f = centers.front();
        const auto& t = dual.faces[static_cast<size_t>(f) - 1];
        Witness w;
        w.kind = WitnessKind::S3;
        w.vertex_map = {t[0], t[1], t[2], 0, 0, 0};
        for (int h : dual.adj[static_cast<size_t>(f)]) {
            const auto sh = shared_pair(dual, f, h);
            const int apex =
                third_vertex(dual.faces[static_cast<size_t>(h) - 1], sh.first, sh.second);
            if (sh == std::pair<int, int>{t[0], t[1]})
                w.vertex_map[3] = apex;
            else if (sh == std::pair<int, int>{t[1], t[2]})
                w.vertex_map[4] = apex;
            else
                w.vertex_map[5] = apex;
        }
        out.s3 = std::move(w);
    }
    if (std::holds_alternative<Assignment>(compute_assignment(g, dual))) {
        out.b = 1;
    } else {
        out.b = 2;
        out.m_obstruction = find_m_obstruction(reduced_graph(g, dual));
    }
    return out;
}

}  // namespace epg
