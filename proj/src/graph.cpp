#include "unialg/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>

#include "unialg/error.hpp"

namespace unialg {

Graph::Graph(std::size_t vertices, std::vector<Edge> edges) : n_(vertices)
{
    for (auto &[u, v] : edges) {
        if (u >= n_ || v >= n_)
            throw DomainError("edge endpoint out of range");
        if (u == v)
            throw DomainError("loops are not allowed (vertex " + std::to_string(u + 1) + ")");
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw DomainError("duplicate edge");
    edges_ = std::move(edges);
}

Graph Graph::parse(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;
        auto where = " on line " + std::to_string(lineno);
        auto number = [&](const std::string &t) -> long long {
            if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), ::isdigit))
                throw ParseError("expected a positive integer" + where, 1);
            return std::stoll(t);
        };
        if (!n) {
            if (tok.size() != 2 || tok[0] != "graph" || number(tok[1]) < 1)
                throw ParseError("expected 'graph <n>' header" + where, 1);
            n = static_cast<std::size_t>(number(tok[1]));
            continue;
        }
        if (tok.size() != 2)
            throw ParseError("expected 'u v' edge" + where, 1);
        auto u = number(tok[0]), v = number(tok[1]);
        if (u < 1 || v < 1 || static_cast<std::size_t>(u) > *n || static_cast<std::size_t>(v) > *n)
            throw ParseError("vertex out of range" + where, 1);
        edges.emplace_back(u - 1, v - 1);
    }
    if (!n)
        throw ParseError("missing 'graph <n>' header", 1);
    return Graph(*n, std::move(edges));
}

std::vector<std::vector<std::size_t>> Graph::adjacency() const
{
    std::vector<std::vector<std::size_t>> adj(n_);
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

bool Graph::connected() const
{
    if (n_ == 0)
        return true;
    auto adj = adjacency();
    std::vector<bool> seen(n_, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n_;
}

std::string Graph::to_string() const
{
    std::ostringstream os;
    os << "graph " << n_ << '\n';
    for (auto [u, v] : edges_)
        os << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

Graph Graph::cycle(std::size_t n)
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph Graph::path(std::size_t n)
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph Graph::complete(std::size_t n)
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

BipartiteResult is_bipartite(const Graph &g)
{
    const auto n = g.vertex_count();
    auto adj = g.adjacency();
    BipartiteResult r;
    r.coloring.assign(n, -1);
    std::vector<std::size_t> parent(n), depth(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        if (r.coloring[s] != -1)
            continue;
        r.coloring[s] = 0;
        parent[s] = s;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto v : adj[u]) {
                if (r.coloring[v] == -1) {
                    r.coloring[v] = 1 - r.coloring[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    q.push(v);
                } else if (r.coloring[v] == r.coloring[u]) {
                    // Climb both tree paths to the common ancestor.
                    std::vector<std::size_t> left{u}, right{v};
                    auto a = u, b = v;
                    while (a != b) {
                        if (depth[a] >= depth[b]) {
                            a = parent[a];
                            left.push_back(a);
                        } else {
                            b = parent[b];
                            right.push_back(b);
                        }
                    }
                    right.pop_back();
                    std::reverse(right.begin(), right.end());
                    left.insert(left.end(), right.begin(), right.end());
                    r.bipartite = false;
                    r.coloring.clear();
                    r.odd_cycle = std::move(left);
                    return r;
                }
            }
        }
    }
    return r;
}

namespace {

std::uint32_t edge_bit(std::size_t n, std::size_t u, std::size_t v)
{
    if (u > v)
        std::swap(u, v);
    // Row-major index into the strict upper triangle.
    return static_cast<std::uint32_t>(u * n - u * (u + 1) / 2 + (v - u - 1));
}

} // namespace

std::vector<Graph> connected_graphs_up_to_isomorphism(std::size_t n)
{
    if (n == 0 || n > 7)
        throw DomainError("graph enumeration supports 1..7 vertices");
    const std::size_t m = n * (n - 1) / 2;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    // Mark the whole orbit of each new mask; the first mask met is the representative.
    std::vector<bool> seen(std::size_t{1} << m, false);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        if (seen[mask])
            continue;
        for (const auto &perm : perms) {
            std::uint32_t image = 0;
            for (std::size_t b = 0; b < m; ++b)
                if (mask >> b & 1)
                    image |= std::uint32_t{1} << edge_bit(n, perm[pairs[b].first], perm[pairs[b].second]);
            seen[image] = true;
        }
        std::vector<Graph::Edge> edges;
        for (std::size_t b = 0; b < m; ++b)
            if (mask >> b & 1)
                edges.push_back(pairs[b]);
        Graph g(n, std::move(edges));
        if (g.connected())
            out.push_back(std::move(g));
    }
    return out;
}

} // namespace unialg
