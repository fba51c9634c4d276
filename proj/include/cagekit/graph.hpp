#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cagekit {

// Simple undirected graph on vertices 0..n-1.  No loops, no multi-edges;
// adjacency lists are kept sorted so traversal order is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const;

    // Idempotent; throws std::invalid_argument on loops or out-of-range vertices.
    void add_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const;

    const std::vector<std::size_t>& neighbors(std::size_t v) const;
    std::size_t degree(std::size_t v) const { return neighbors(v).size(); }

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<std::size_t>> adj_;
};

struct Graph6Error : std::runtime_error {
    explicit Graph6Error(const std::string& what) : std::runtime_error(what) {}
};

// graph6 format (McKay).  parse accepts an optional ">>graph6<<" header and
// ignores trailing whitespace/newline; write emits the bare encoding.
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

}  // namespace cagekit
