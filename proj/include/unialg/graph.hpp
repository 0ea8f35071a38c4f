#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace unialg {

/// Simple undirected graph on vertices 0..n-1 (no loops, no multi-edges).
class Graph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    /// Edges are normalized to (min, max) and sorted. Throws DomainError on a
    /// loop, an out-of-range endpoint, or a duplicate edge.
    Graph(std::size_t vertices, std::vector<Edge> edges);

    /// Text format: first line `graph <n>`, then one `u v` edge per line, 1-indexed.
    /// Blank lines and `#` comments are ignored.
    static Graph parse(std::string_view text);

    std::size_t vertex_count() const noexcept { return n_; }
    const std::vector<Edge> &edges() const noexcept { return edges_; }
    std::vector<std::vector<std::size_t>> adjacency() const;
    bool connected() const;

    std::string to_string() const;

    static Graph cycle(std::size_t n);
    static Graph path(std::size_t n);
    static Graph complete(std::size_t n);

private:
    std::size_t n_;
    std::vector<Edge> edges_;
};

struct BipartiteResult {
    bool bipartite = true;
    /// 0/1 color per vertex when bipartite.
    std::vector<int> coloring;
    /// Vertices of an odd cycle, in order, when not bipartite.
    std::vector<std::size_t> odd_cycle;
};

/// Breadth-first 2-coloring per connected component.
BipartiteResult is_bipartite(const Graph &g);

/// Every connected graph on `n` vertices, one representative per isomorphism class.
std::vector<Graph> connected_graphs_up_to_isomorphism(std::size_t n);

} // namespace unialg
