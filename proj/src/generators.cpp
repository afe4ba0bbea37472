#include "epg/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace epg {

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    // Uniform in [0, bound) by rejection; avoids unspecified stdlib
    // distributions so results are identical everywhere.
    std::uint64_t draw(std::uint64_t bound) {
        std::uint64_t threshold = (~std::uint64_t{0} / bound) * bound;
        std::uint64_t x;
        do {
            x = eng();
        } while (x >= threshold);
        return x % bound;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[draw(i)]);
    }
};

}  // namespace

Graph gen_nsun(int n) {
    if (n < 3) throw std::invalid_argument("sun needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(n + i, i);
        edges.emplace_back(n + i, i % n + 1);
    }
    return Graph::from_edges(2 * n, edges);
}

Graph gen_cycle(int r) {
    if (r < 3) throw std::invalid_argument("cycle needs r >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < r; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(r, 1);
    return Graph::from_edges(r, edges);
}

Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph gen_m1() {
    return Graph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {2, 5}});
}

Graph gen_m2() {
    return Graph::from_edges(7, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}});
}

Graph gen_m3() {
    return Graph::from_edges(6, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}, {3, 6}});
}

Graph gen_m1_ell_variant(int ell, bool diag_a_through_attach, bool diag_b_through_attach) {
    if (ell < 0) throw std::invalid_argument("chain length must be nonnegative");
    // a1..a4 = 1..4 with a1 the attachment; chain interior vertices follow;
    // b-cycle last with b1 the attachment (b1 = a1 when ell = 0).
    int a1 = 1, a2 = 2, a3 = 3, a4 = 4;
    int b1, b2, b3, b4;
    int n;
    auto chain_vertex = [&](int k) {  // c_k for 0 <= k <= 2*ell
        if (k == 0) return a1;
        if (k == 2 * ell) return b1;
        return 4 + k;
    };
    if (ell == 0) {
        b1 = a1;
        b2 = 5;
        b3 = 6;
        b4 = 7;
        n = 7;
    } else {
        b1 = 2 * ell + 4;
        b2 = 2 * ell + 5;
        b3 = 2 * ell + 6;
        b4 = 2 * ell + 7;
        n = 2 * ell + 7;
    }
    std::vector<std::pair<int, int>> edges = {{a1, a2}, {a2, a3}, {a3, a4}, {a1, a4}};
    edges.emplace_back(diag_a_through_attach ? std::pair<int, int>{a1, a3}
                                             : std::pair<int, int>{a2, a4});
    edges.emplace_back(b1, b2);
    edges.emplace_back(b2, b3);
    edges.emplace_back(b3, b4);
    edges.emplace_back(b1, b4);
    edges.emplace_back(diag_b_through_attach ? std::pair<int, int>{b1, b3}
                                             : std::pair<int, int>{b2, b4});
    for (int t = 1; t <= ell; ++t) {
        int u = chain_vertex(2 * t - 2), v = chain_vertex(2 * t - 1), w = chain_vertex(2 * t);
        edges.emplace_back(u, v);
        edges.emplace_back(v, w);
        edges.emplace_back(u, w);
    }
    return Graph::from_edges(n, edges);
}

Graph gen_m1_ell(int ell) { return gen_m1_ell_variant(ell, true, true); }

namespace {

// Uniform Dyck word with m up-steps via the cycle lemma: shuffle m ups and
// m+1 downs, rotate to just past the first prefix-sum minimum, drop the
// trailing down-step.
std::vector<char> random_dyck(int m, Rng& rng) {
    std::vector<char> seq(static_cast<size_t>(2 * m + 1), 0);
    for (int i = 0; i < m; ++i) seq[static_cast<size_t>(i)] = 1;
    rng.shuffle(seq);
    int sum = 0, best = 1, best_pos = -1;
    for (int i = 0; i < 2 * m + 1; ++i) {
        sum += seq[static_cast<size_t>(i)] ? 1 : -1;
        if (sum < best) {
            best = sum;
            best_pos = i;
        }
    }
    std::vector<char> word;
    word.reserve(static_cast<size_t>(2 * m));
    for (int i = 1; i <= 2 * m; ++i)
        word.push_back(seq[static_cast<size_t>((best_pos + i) % (2 * m + 1))]);
    return word;
}

// Leaf count of the subtree whose code starts at pos; a leaf's code is empty,
// so the subtree is a leaf iff the next symbol is a down-step or the end.
int parse_leaves(const std::vector<char>& word, size_t& pos) {
    if (pos >= word.size() || !word[pos]) return 1;
    ++pos;  // up-step
    int left = parse_leaves(word, pos);
    ++pos;  // matching down-step
    int right = parse_leaves(word, pos);
    return left + right;
}

// Maps subtrees to polygon arcs: the subtree at pos triangulates [lo, hi],
// leaves consume unit arcs left to right, each internal node is a triangle.
void emit_arcs(const std::vector<char>& word, size_t& pos, int lo, int hi,
               std::vector<std::pair<int, int>>& edges) {
    if (hi == lo + 1) return;  // unit arc, boundary edge
    ++pos;                     // up-step
    size_t probe = pos;
    int left_leaves = parse_leaves(word, probe);
    int mid = lo + left_leaves;
    emit_arcs(word, pos, lo, mid, edges);
    ++pos;  // down-step
    emit_arcs(word, pos, mid, hi, edges);
    edges.emplace_back(lo, mid);
    edges.emplace_back(mid, hi);
    edges.emplace_back(lo, hi);
}

}  // namespace

Graph gen_rand_maximal_outerplanar(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("maximal outerplanar needs n >= 3");
    Rng rng(seed);
    auto word = random_dyck(n - 2, rng);
    std::vector<std::pair<int, int>> edges;
    size_t pos = 0;
    emit_arcs(word, pos, 1, n, edges);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(n, edges);
}

Graph gen_rand_cactus(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("cactus needs n >= 1");
    Rng rng(seed);
    if (n == 1) return Graph::from_edges(1, {});
    std::vector<int> parent(static_cast<size_t>(n) + 1, 0);
    std::vector<int> depth(static_cast<size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= n; ++v) {
        parent[static_cast<size_t>(v)] = static_cast<int>(rng.draw(static_cast<std::uint64_t>(v - 1))) + 1;
        depth[static_cast<size_t>(v)] = depth[static_cast<size_t>(parent[static_cast<size_t>(v)])] + 1;
        edges.emplace_back(parent[static_cast<size_t>(v)], v);
    }
    // Tree edge {child's parent pointer}; on_cycle keyed by child vertex.
    std::vector<char> on_cycle(static_cast<size_t>(n) + 1, 0);
    std::set<std::pair<int, int>> extra;
    int attempts = 2 * n;
    for (int t = 0; t < attempts; ++t) {
        int u = static_cast<int>(rng.draw(static_cast<std::uint64_t>(n))) + 1;
        int v = static_cast<int>(rng.draw(static_cast<std::uint64_t>(n))) + 1;
        if (u == v) continue;
        // Tree path u..v via parent walks.
        int a = u, b = v;
        std::vector<int> path_edges_a, path_edges_b;
        while (depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)]) {
            path_edges_a.push_back(a);
            a = parent[static_cast<size_t>(a)];
        }
        while (depth[static_cast<size_t>(b)] > depth[static_cast<size_t>(a)]) {
            path_edges_b.push_back(b);
            b = parent[static_cast<size_t>(b)];
        }
        while (a != b) {
            path_edges_a.push_back(a);
            path_edges_b.push_back(b);
            a = parent[static_cast<size_t>(a)];
            b = parent[static_cast<size_t>(b)];
        }
        std::vector<int> path_children = path_edges_a;
        path_children.insert(path_children.end(), path_edges_b.begin(), path_edges_b.end());
        if (path_children.size() < 2) continue;  // adjacent in the tree
        auto key = std::minmax(u, v);
        if (extra.count({key.first, key.second})) continue;
        bool free_path = true;
        for (int c : path_children)
            if (on_cycle[static_cast<size_t>(c)]) {
                free_path = false;
                break;
            }
        if (!free_path) continue;
        for (int c : path_children) on_cycle[static_cast<size_t>(c)] = 1;
        extra.insert({key.first, key.second});
        edges.emplace_back(key.first, key.second);
    }
    return Graph::from_edges(n, edges);
}

Graph gen_rand_connected_outerplanar(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("graph needs n >= 1");
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {{1, 2}});
    Graph tri = gen_rand_maximal_outerplanar(n, seed);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    // Deterministic BFS tree from vertex 1, then keep each chord with
    // probability 1/2: connected spanning subgraph of the triangulation.
    std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> kept;
    std::set<std::pair<int, int>> tree;
    std::vector<int> queue = {1};
    visited[1] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : tri.neighbors(u)) {
            if (visited[static_cast<size_t>(w)]) continue;
            visited[static_cast<size_t>(w)] = 1;
            tree.insert({std::min(u, w), std::max(u, w)});
            queue.push_back(w);
        }
    }
    for (const auto& e : tri.edges()) {
        if (tree.count(e) || rng.draw(2) == 1) kept.push_back(e);
    }
    return Graph::from_edges(n, kept);
}

}  // namespace epg
