#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace epg {

// Undirected simple graph. Vertex ids are 1-based; adj_[0] is unused.
// Adjacency lists and the edge list are kept sorted ascending.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Validates ids, loops and duplicates; throws std::invalid_argument.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    // Edges normalized to u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// Thrown by parse_graph; message always names the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

// Text format: first content line "n m", then m lines "u v".
// '#' starts a comment; blank lines are skipped.
Graph parse_graph(const std::string& text);

std::string format_graph(const Graph& g);

}  // namespace epg
