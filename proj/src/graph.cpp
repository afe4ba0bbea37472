#include "epg/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace epg {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n) + 1) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range [1, " +
                                    std::to_string(n_) + "]");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
        if (u > v) std::swap(u, v);
        g.edges_.emplace_back(u, v);
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (size_t i = 1; i < g.edges_.size(); ++i) {
        if (g.edges_[i] == g.edges_[i - 1])
            throw std::invalid_argument("duplicate edge " + std::to_string(g.edges_[i].first) +
                                        " " + std::to_string(g.edges_[i].second));
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adj_[static_cast<size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

namespace {

// Strips comments, splits into whitespace tokens; empty result means skip.
std::vector<std::string> content_tokens(const std::string& line) {
    std::string body = line;
    if (auto pos = body.find('#'); pos != std::string::npos) body.erase(pos);
    std::istringstream in(body);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

long long parse_int(const std::string& tok, int line, const char* what) {
    size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<long long> seen;
    int header_line = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = content_tokens(line);
        if (tokens.empty()) continue;
        if (n < 0) {
            if (tokens.size() != 2)
                throw ParseError(line_no, "expected header 'n m'");
            n = parse_int(tokens[0], line_no, "vertex count");
            m = parse_int(tokens[1], line_no, "edge count");
            if (n < 1) throw ParseError(line_no, "vertex count must be at least 1");
            if (m < 0) throw ParseError(line_no, "edge count must be nonnegative");
            header_line = line_no;
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(line_no, "unexpected content after " + std::to_string(m) +
                                          " edge lines");
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected edge 'u v'");
        long long u = parse_int(tokens[0], line_no, "vertex id");
        long long v = parse_int(tokens[1], line_no, "vertex id");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(line_no, "vertex id " + std::to_string(u < 1 || u > n ? u : v) +
                                          " out of range [1, " + std::to_string(n) + "]");
        if (u == v) throw ParseError(line_no, "loop edge " + std::to_string(u) + " " +
                                                  std::to_string(v));
        int a = static_cast<int>(std::min(u, v));
        int b = static_cast<int>(std::max(u, v));
        if (!seen.insert(static_cast<long long>(a) * (n + 1) + b).second)
            throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " +
                                          std::to_string(v));
        edges.emplace_back(a, b);
    }
    if (n < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'n m'");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(header_line, "expected " + std::to_string(m) + " edge lines, found " +
                                          std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.num_vertices();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp = {s};
        seen[static_cast<size_t>(s)] = 1;
        for (size_t head = 0; head < comp.size(); ++head)
            for (int w : g.neighbors(comp[head]))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace epg
