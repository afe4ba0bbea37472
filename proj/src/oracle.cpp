#include "epg/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "epg/maxouterplanar.hpp"

namespace epg {

bool is_interval(const Graph& g, int limit) {
    const int n = g.num_vertices();
    if (n > limit)
        throw std::invalid_argument("interval oracle limited to " + std::to_string(limit) +
                                    " vertices, got " + std::to_string(n));
    // Interval iff some ordering is umbrella-free: i < j < k and i ~ k
    // forces i ~ j.
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    std::function<bool()> rec = [&]() -> bool {
        if (static_cast<int>(order.size()) == n) return true;
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (size_t i = 0; i < order.size() && ok; ++i) {
                if (!g.has_edge(order[i], v)) continue;
                for (size_t j = i + 1; j < order.size() && ok; ++j)
                    if (!g.has_edge(order[i], order[j])) ok = false;
            }
            if (!ok) continue;
            used[v] = true;
            order.push_back(v);
            if (rec()) return true;
            order.pop_back();
            used[v] = false;
        }
        return false;
    };
    return rec();
}

namespace {

// Exhaustive search over one connected vertex set. Grid lines are ordered
// slots per axis rather than integer coordinates: a corner either reuses an
// existing line or inserts a fresh one into a chosen gap, so only the
// relative order of lines is ever enumerated. Two paths share a grid edge
// exactly when they have collinear segments overlapping in more than a
// point once positions become coordinates. Compacting a representation
// leaves no line without a corner on it, so a component of c vertices never
// needs more than c*(k+2) lines per axis and the search is complete at the
// default cap.
struct OrderedSearch {
    struct Corner {
        int x, y;  // line ids
    };
    struct Seg {
        bool horiz;
        int line;  // id of the line the segment runs along
        int a, b;  // end line ids on the varying axis, traversal order
    };
    struct Axis {
        std::vector<int> order;  // line ids, lowest coordinate first
        int next = 0;
        int pos(int id) const {
            return static_cast<int>(std::find(order.begin(), order.end(), id) - order.begin());
        }
        int size() const { return static_cast<int>(order.size()); }
        int insert(int gap) {
            order.insert(order.begin() + gap, next);
            return next++;
        }
        void remove(int id) { order.erase(std::find(order.begin(), order.end(), id)); }
    };

    const Graph& g;
    int k;
    bool monotone;
    int cap;  // max distinct lines per axis
    long long budget;
    long long nodes = 0;
    bool exceeded = false;

    std::vector<int> verts;  // the component, any order
    std::vector<int> placed_order;
    std::map<int, std::vector<Corner>> placed;
    std::vector<Corner> cand;  // candidate under construction
    Axis ax, ay;

    OrderedSearch(const Graph& graph, int bends, bool mono, int line_cap, long long bud,
                  std::vector<int> comp)
        : g(graph), k(bends), monotone(mono), cap(line_cap), budget(bud), verts(std::move(comp)) {}

    bool spend() {
        if (++nodes > budget) {
            exceeded = true;
            return false;
        }
        return true;
    }

    static std::vector<Seg> segments(const std::vector<Corner>& cs) {
        std::vector<Seg> out;
        out.reserve(cs.size() - 1);
        for (size_t i = 1; i < cs.size(); ++i) {
            if (cs[i].y == cs[i - 1].y)
                out.push_back({true, cs[i].y, cs[i - 1].x, cs[i].x});
            else
                out.push_back({false, cs[i].x, cs[i - 1].y, cs[i].y});
        }
        return out;
    }

    void span(const Seg& s, int& lo, int& hi) const {
        const Axis& axis = s.horiz ? ax : ay;
        lo = axis.pos(s.a);
        hi = axis.pos(s.b);
        if (lo > hi) std::swap(lo, hi);
    }

    bool overlap(const Seg& s, const Seg& t) const {
        if (s.horiz != t.horiz || s.line != t.line) return false;
        int slo, shi, tlo, thi;
        span(s, slo, shi);
        span(t, tlo, thi);
        return std::min(shi, thi) > std::max(slo, tlo);
    }

    // Closed contact, crossings included; a revisited grid point already
    // breaks a path, so the self-intersection test uses this.
    bool touch(const Seg& s, const Seg& t) const {
        int slo, shi, tlo, thi;
        span(s, slo, shi);
        span(t, tlo, thi);
        if (s.horiz == t.horiz) {
            if (s.line != t.line) return false;
            return std::min(shi, thi) >= std::max(slo, tlo);
        }
        const Seg& h = s.horiz ? s : t;
        const Seg& v = s.horiz ? t : s;
        int hlo, hhi, vlo, vhi;
        span(h, hlo, hhi);
        span(v, vlo, vhi);
        int vx = ax.pos(v.line), hy = ay.pos(h.line);
        return hlo <= vx && vx <= hhi && vlo <= hy && hy <= vhi;
    }

    // Segments alternate axes, so a self-contact needs four of them.
    bool simple(const std::vector<Seg>& cs) const {
        for (size_t i = 0; i + 2 < cs.size(); ++i)
            for (size_t j = i + 2; j < cs.size(); ++j)
                if (touch(cs[i], cs[j])) return false;
        return true;
    }

    bool validate(int v, const std::vector<Seg>& cs) const {
        for (int w : placed_order) {
            auto ws = segments(placed.at(w));
            bool share = false;
            for (const auto& a : cs) {
                for (const auto& b : ws)
                    if (overlap(a, b)) {
                        share = true;
                        break;
                    }
                if (share) break;
            }
            if (share != g.has_edge(v, w)) return false;
        }
        return true;
    }

    // Visits every coordinate choice on an axis: existing lines, then fresh
    // insertions into each gap (curbed by the line cap). lo_id and hi_id
    // bound the position strictly when nonnegative; ban_id excludes one
    // existing line. f(id) may grow cand and recurse; a fresh line stays in
    // place when f reports the search hit, so the drawing survives unwinding.
    template <class F>
    bool each_slot(Axis& axis, int lo_id, int hi_id, int ban_id, F f) {
        const int plo = lo_id >= 0 ? axis.pos(lo_id) : -1;
        const int phi = hi_id >= 0 ? axis.pos(hi_id) : axis.size();
        for (int q = 0; q < axis.size(); ++q) {
            if (q <= plo || q >= phi) continue;
            int id = axis.order[q];
            if (id == ban_id) continue;
            if (f(id)) return true;
            if (exceeded) return false;
        }
        if (axis.size() >= cap) return false;
        for (int i = 0; i <= axis.size(); ++i) {
            // A gap at the bounding line's own index lands on its low side.
            if (i <= plo || i > phi) continue;
            int id = axis.insert(i);
            bool stop = f(id);
            if (!stop) axis.remove(id);
            if (stop || exceeded) return stop;
        }
        return false;
    }

    // Hands the finished candidate to placement. spine_si is the index of
    // the host segment the spine was built over; front_cnt counts corners
    // prepended before the spine, locating it inside cand.
    bool emit(int v, int host, size_t spine_si, size_t front_cnt) {
        if (!spend()) return false;
        auto cs = segments(cand);
        if (cs.size() >= 4 && !simple(cs)) return false;
        if (host > 0) {
            auto hs = segments(placed.at(host));
            // Each candidate is taken once: from the first host segment it
            // meets, with the spine as its own first segment meeting that.
            for (size_t j = 0; j < spine_si; ++j)
                for (const auto& a : cs)
                    if (overlap(hs[j], a)) return false;
            for (size_t i = 0; i < front_cnt; ++i)
                if (overlap(cs[i], hs[spine_si])) return false;
        }
        if (!validate(v, cs)) return false;
        placed.emplace(v, cand);
        placed_order.push_back(v);
        if (dfs()) return true;
        placed_order.pop_back();
        cand = placed.at(v);  // deeper levels reused the buffer
        placed.erase(v);
        return false;
    }

    bool back_extend(int v, int host, size_t spine_si, size_t front_cnt, int bends_left,
                     bool first_up) {
        if (emit(v, host, spine_si, front_cnt)) return true;
        if (exceeded || bends_left == 0) return false;
        const Corner back = cand.back();
        const bool horiz = cand[cand.size() - 2].y == back.y;  // last segment
        Axis& axis = horiz ? ay : ax;
        const int cur = horiz ? back.y : back.x;
        const int lo = monotone || first_up ? cur : -1;
        return each_slot(axis, lo, -1, cur, [&](int id) {
            cand.push_back(horiz ? Corner{back.x, id} : Corner{id, back.y});
            bool stop = back_extend(v, host, spine_si, front_cnt, bends_left - 1, false);
            if (!stop) cand.pop_back();
            return stop;
        });
    }

    bool front_extend(int v, int host, size_t spine_si, size_t front_cnt, int bends_left) {
        if (back_extend(v, host, spine_si, front_cnt, bends_left, false)) return true;
        if (exceeded || bends_left == 0) return false;
        const Corner front = cand.front();
        const bool horiz = cand[1].y == front.y;  // first segment
        Axis& axis = horiz ? ay : ax;
        const int cur = horiz ? front.y : front.x;
        // Walking backward along a monotone path, coordinates descend.
        const int hi = monotone ? cur : -1;
        return each_slot(axis, -1, hi, cur, [&](int id) {
            cand.insert(cand.begin(), horiz ? Corner{front.x, id} : Corner{id, front.y});
            bool stop = front_extend(v, host, spine_si, front_cnt + 1, bends_left - 1);
            if (!stop) cand.erase(cand.begin());
            return stop;
        });
    }

    // First path: one fresh row, first segment heading +x, first turn +y
    // unless monotone forces it anyway. Translations, reflections and the
    // axis swap are all quotiented out.
    bool place_first(int v) {
        int y0 = ay.insert(0);
        int x0 = ax.insert(0);
        int x1 = ax.insert(1);
        cand = {{x0, y0}, {x1, y0}};
        bool stop = back_extend(v, 0, 0, 0, k, !monotone);
        if (!stop) {
            cand.clear();
            ax.remove(x1);
            ax.remove(x0);
            ay.remove(y0);
        }
        return stop;
    }

    // Candidates for v share a segment with some segment of the host: the
    // spine, chosen collinear and overlapping, then extended at both ends
    // within the bend allowance.
    bool spine_candidates(int v, int host) {
        auto hs = segments(placed.at(host));
        for (size_t si = 0; si < hs.size(); ++si) {
            const Seg s = hs[si];
            Axis& axis = s.horiz ? ax : ay;
            int s_lo = s.a, s_hi = s.b;
            if (axis.pos(s_lo) > axis.pos(s_hi)) std::swap(s_lo, s_hi);
            bool stop = each_slot(axis, -1, s_hi, -1, [&](int a_id) {
                // b right of a and of the host segment's low end.
                int lo_id = axis.pos(a_id) >= axis.pos(s_lo) ? a_id : s_lo;
                return each_slot(axis, lo_id, -1, -1, [&](int b_id) {
                    cand.clear();
                    if (s.horiz) {
                        cand.push_back({a_id, s.line});
                        cand.push_back({b_id, s.line});
                    } else {
                        cand.push_back({s.line, a_id});
                        cand.push_back({s.line, b_id});
                    }
                    return front_extend(v, host, si, 0, k);
                });
            });
            if (stop || exceeded) return stop;
        }
        return false;
    }

    bool dfs() {
        if (placed_order.size() == verts.size()) return true;
        // Most placed neighbors, then degree, then id.
        int best = 0, bn = -1;
        for (int u : verts) {
            if (placed.count(u)) continue;
            int pn = 0;
            for (int w : placed_order) pn += g.has_edge(u, w) ? 1 : 0;
            if (pn > bn || (pn == bn && best && g.degree(u) > g.degree(best))) {
                best = u;
                bn = pn;
            }
        }
        int v = best;
        if (placed_order.empty()) return place_first(v);
        // Anchor on the placed neighbor with the fewest segments.
        int host = 0;
        size_t fewest = ~size_t{0};
        for (int w : placed_order)
            if (g.has_edge(v, w) && placed.at(w).size() < fewest) {
                fewest = placed.at(w).size();
                host = w;
            }
        if (!host) throw std::logic_error("unanchored vertex inside a component");
        return spine_candidates(v, host);
    }
};

}  // namespace

SearchOutcome bounded_grid_search(const Graph& g, int k, bool monotonic, int bound,
                                  long long budget) {
    const int n = g.num_vertices();
    SearchOutcome out;
    out.bound = bound > 0 ? bound : n * (k + 2);
    out.nodes_expanded = 0;
    EpgRepresentation merged;
    int yoff = 0;
    for (const auto& comp : components(g)) {
        if (comp.size() == 1) {
            merged.paths.emplace(comp[0], GridPath({{0, yoff}, {1, yoff}}));
            yoff += 2;
            continue;
        }
        int cap = bound > 0 ? std::max(bound, 2) : static_cast<int>(comp.size()) * (k + 2);
        OrderedSearch s(g, k, monotonic, cap, budget - out.nodes_expanded, comp);
        bool found = s.dfs();
        out.nodes_expanded += s.nodes;
        if (s.exceeded) {
            out.status = SearchStatus::BUDGET_EXCEEDED;
            return out;
        }
        if (!found) {
            out.status = SearchStatus::NONE_WITHIN_BOUND;
            return out;
        }
        EpgRepresentation part;
        for (const auto& [v, cs] : s.placed) {
            std::vector<GridPoint> pts;
            pts.reserve(cs.size());
            for (const auto& c : cs) pts.push_back({s.ax.pos(c.x), s.ay.pos(c.y)});
            part.paths.emplace(v, GridPath(pts));
        }
        part = compact(part);
        for (auto& [v, p] : part.paths) {
            std::vector<GridPoint> pts = p.corners();
            for (auto& q : pts) q.y += yoff;
            merged.paths.emplace(v, GridPath(pts));
        }
        yoff += part.rows() + 2;
    }
    out.status = SearchStatus::FOUND;
    out.rep = compact(merged);
    return out;
}

bool m_free_direct(const Graph& g) {
    DualTree dual = almost_dual(g);
    auto centers = s3_centers(dual);
    const int c = static_cast<int>(centers.size());
    if (c < 2) return true;

    // Rule one: a central face neighbored to two or more central faces.
    std::set<int> cset(centers.begin(), centers.end());
    for (int f : centers) {
        int adj_centers = 0;
        for (int h : dual.adj[static_cast<size_t>(f)]) adj_centers += cset.count(h) ? 1 : 0;
        if (adj_centers >= 2) return false;
    }

    // Rule two: a contact component (central faces chained by shared
    // vertices) holding two or more dual-adjacent center pairs.
    std::vector<int> dsu(static_cast<size_t>(c));
    for (int i = 0; i < c; ++i) dsu[static_cast<size_t>(i)] = i;
    std::function<int(int)> find = [&](int x) {
        while (dsu[static_cast<size_t>(x)] != x) x = dsu[static_cast<size_t>(x)] = dsu[static_cast<size_t>(dsu[static_cast<size_t>(x)])];
        return x;
    };
    auto share_vertex = [&](int f, int h) {
        const auto& a = dual.faces[static_cast<size_t>(f) - 1];
        const auto& b = dual.faces[static_cast<size_t>(h) - 1];
        for (int x : a)
            for (int y : b)
                if (x == y) return true;
        return false;
    };
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j)
            if (share_vertex(centers[static_cast<size_t>(i)], centers[static_cast<size_t>(j)]))
                dsu[static_cast<size_t>(find(i))] = find(j);
    std::vector<int> pairs(static_cast<size_t>(c), 0);
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j) {
            const auto& na = dual.adj[static_cast<size_t>(centers[static_cast<size_t>(i)])];
            if (std::find(na.begin(), na.end(), centers[static_cast<size_t>(j)]) == na.end())
                continue;
            if (++pairs[static_cast<size_t>(find(i))] >= 2) return false;
        }
    return true;
}

ExactBendNumbers bend_number_exact(const Graph& g, long long budget) {
    ExactBendNumbers out;
    long long left = budget;
    int start_k = 0;
    if (g.num_vertices() <= 10) {
        if (is_interval(g)) {
            out.b = 0;
            out.bm = 0;  // straight paths are monotonic
            return out;
        }
        start_k = 1;
    }
    for (int kk = start_k; kk <= 4 && !out.b; ++kk) {
        auto r = bounded_grid_search(g, kk, false, 0, left);
        out.nodes_expanded += r.nodes_expanded;
        left -= r.nodes_expanded;
        if (r.status == SearchStatus::FOUND)
            out.b = kk;
        else if (r.status == SearchStatus::BUDGET_EXCEEDED)
            return out;
    }
    if (!out.b) return out;
    for (int kk = std::max(start_k, *out.b); kk <= 4 && !out.bm; ++kk) {
        auto r = bounded_grid_search(g, kk, true, 0, left);
        out.nodes_expanded += r.nodes_expanded;
        left -= r.nodes_expanded;
        if (r.status == SearchStatus::FOUND)
            out.bm = kk;
        else if (r.status == SearchStatus::BUDGET_EXCEEDED)
            return out;
    }
    return out;
}

}  // namespace epg
