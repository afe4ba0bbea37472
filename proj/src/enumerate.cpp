#include "epg/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace epg {

namespace {

using Edge = std::pair<int, int>;

// Arcs on the stack always span >= 2 boundary steps, i.e. still need a triangle.
void triangulate_rec(int n, std::vector<std::pair<int, int>>& todo, std::vector<Edge>& chords,
                     const std::function<void(const Graph&)>& visit) {
    if (todo.empty()) {
        std::vector<Edge> edges = chords;
        for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(1, n);
        visit(Graph::from_edges(n, edges));
        return;
    }
    auto [lo, hi] = todo.back();
    todo.pop_back();
    for (int k = lo + 1; k < hi; ++k) {
        size_t todo_mark = todo.size(), chord_mark = chords.size();
        if (k - lo >= 2) {
            todo.emplace_back(lo, k);
            chords.emplace_back(lo, k);
        }
        if (hi - k >= 2) {
            todo.emplace_back(k, hi);
            chords.emplace_back(k, hi);
        }
        triangulate_rec(n, todo, chords, visit);
        todo.resize(todo_mark);
        chords.resize(chord_mark);
    }
    todo.emplace_back(lo, hi);
}

}  // namespace

void for_each_triangulation(int n, const std::function<void(const Graph&)>& visit) {
    if (n < 3) throw std::invalid_argument("triangulation needs n >= 3");
    std::vector<std::pair<int, int>> todo = {{1, n}};
    std::vector<Edge> chords;
    triangulate_rec(n, todo, chords, visit);
}

namespace {

// Rooted cacti are memoized per vertex count; a root block is either a bridge
// to a smaller rooted cactus or a cycle whose other vertices carry rooted
// cacti. Blocks are keyed so each multiset of blocks is generated once, and a
// cycle's child sequence is normalized against its reversal.
struct Block {
    std::vector<int> key;        // {0, subtree_id} or {1, r, child ids...}
    int consumed;                // vertices the block adds
    std::vector<int> subtrees;   // flat ids of hanging rooted cacti
    bool cycle;
};

struct CactusEnumerator {
    int max_n;
    std::vector<Graph> flat;                  // all rooted cacti, root = vertex 1
    std::vector<int> flat_size;
    std::vector<std::vector<int>> by_size;    // ids per vertex count
    std::vector<std::vector<Block>> blocks_of_consumed;

    explicit CactusEnumerator(int max_n) : max_n(max_n) {
        by_size.assign(static_cast<size_t>(max_n) + 1, {});
        blocks_of_consumed.assign(static_cast<size_t>(max_n) + 1, {});
        add(Graph::from_edges(1, {}));  // the one-vertex rooted cactus
        for (int k = 2; k <= max_n; ++k) {
            build_blocks(k - 1);
            std::vector<Block> seq;
            compose(k, k - 1, {}, seq);
        }
    }

    void add(Graph g) {
        int n = g.num_vertices();
        flat.push_back(std::move(g));
        flat_size.push_back(n);
        by_size[static_cast<size_t>(n)].push_back(static_cast<int>(flat.size()) - 1);
    }

    // Blocks consuming exactly t vertices; needs rooted cacti of sizes <= t.
    void build_blocks(int t) {
        auto& out = blocks_of_consumed[static_cast<size_t>(t)];
        if (!out.empty() || t < 1) return;
        for (int id : by_size[static_cast<size_t>(t)])
            out.push_back({{0, id}, t, {id}, false});
        // Cycle of length r: r-1 subtrees with sizes summing to t.
        for (int r = 3; r <= t + 1; ++r) {
            std::vector<int> chosen;
            cycle_children(r - 1, t, chosen, out);
        }
    }

    void cycle_children(int slots, int remaining, std::vector<int>& chosen,
                        std::vector<Block>& out) {
        if (slots == 0) {
            if (remaining) return;
            std::vector<int> rev(chosen.rbegin(), chosen.rend());
            if (rev < chosen) return;  // keep one cycle direction
            Block b;
            b.key = {1, static_cast<int>(chosen.size()) + 1};
            b.key.insert(b.key.end(), chosen.begin(), chosen.end());
            b.consumed = 0;
            for (int id : chosen) b.consumed += flat_size[static_cast<size_t>(id)];
            b.subtrees = chosen;
            b.cycle = true;
            out.push_back(std::move(b));
            return;
        }
        for (int s = 1; s <= remaining - (slots - 1); ++s)
            for (int id : by_size[static_cast<size_t>(s)]) {
                chosen.push_back(id);
                cycle_children(slots - 1, remaining - s, chosen, out);
                chosen.pop_back();
            }
    }

    // Non-decreasing block keys; remaining counts vertices still to attach.
    void compose(int k, int remaining, const std::vector<int>& min_key,
                 std::vector<Block>& seq) {
        if (remaining == 0) {
            add(assemble(k, seq));
            return;
        }
        for (int t = 1; t <= remaining; ++t)
            for (const Block& b : blocks_of_consumed[static_cast<size_t>(t)]) {
                if (b.key < min_key) continue;
                seq.push_back(b);
                compose(k, remaining - t, b.key, seq);
                seq.pop_back();
            }
    }

    Graph assemble(int k, const std::vector<Block>& seq) {
        std::vector<Edge> edges;
        int next = 2;
        auto paste = [&](int id) {
            int base = next - 1;  // subtree vertex 1 lands on `next`
            const Graph& sub = flat[static_cast<size_t>(id)];
            for (const auto& [a, b] : sub.edges()) edges.emplace_back(a + base, b + base);
            next += sub.num_vertices();
            return base + 1;
        };
        for (const Block& b : seq) {
            if (!b.cycle) {
                edges.emplace_back(1, paste(b.subtrees[0]));
            } else {
                int prev = 1;
                for (int id : b.subtrees) {
                    int v = paste(id);
                    edges.emplace_back(prev, v);
                    prev = v;
                }
                edges.emplace_back(prev, 1);
            }
        }
        return Graph::from_edges(k, edges);
    }
};

}  // namespace

void for_each_cactus_upto(int max_n, const std::function<void(const Graph&)>& visit) {
    if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
    CactusEnumerator e(max_n);
    for (const Graph& g : e.flat) visit(g);
}

std::uint64_t canonical_code(const Graph& g) {
    int n = g.num_vertices();
    if (n > 8) throw std::invalid_argument("canonical_code supports n <= 8");
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (g.has_edge(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]))
                    code |= std::uint64_t{1} << bit;
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

bool mask_connected(int n, std::uint64_t mask) {
    if (n == 1) return true;
    auto bit_index = [n](int i, int j) {  // i < j, zero-based
        return i * (2 * n - i - 1) / 2 + (j - i - 1);
    };
    std::uint64_t seen = 1;
    std::vector<int> stack = {0};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (v == u || (seen >> v & 1)) continue;
            int i = std::min(u, v), j = std::max(u, v);
            if (mask >> bit_index(i, j) & 1) {
                seen |= std::uint64_t{1} << v;
                stack.push_back(v);
            }
        }
    }
    return seen + 1 == std::uint64_t{1} << n;
}

}  // namespace

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit) {
    if (n < 1 || n > 6) throw std::invalid_argument("for_each_connected_graph supports 1 <= n <= 6");
    int pairs = n * (n - 1) / 2;
    std::set<std::uint64_t> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        if (!mask_connected(n, mask)) continue;
        std::vector<Edge> edges;
        int bit = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j, ++bit)
                if (mask >> bit & 1) edges.emplace_back(i, j);
        Graph g = Graph::from_edges(n, edges);
        if (seen.insert(canonical_code(g)).second) visit(g);
    }
}

}  // namespace epg
