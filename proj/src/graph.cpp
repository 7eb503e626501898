#include "grundy/graph.hpp"

#include <algorithm>

namespace grundy {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    adj_.assign(n, VertexSet(n));
    closed_.assign(n, VertexSet(n));
    for (int v = 0; v < n; ++v) closed_[v].set(v);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loops are not allowed");
    if (adj_[u].test(v)) throw InputError("duplicate edge");
    adj_[u].set(v);
    adj_[v].set(u);
    closed_[u].set(v);
    closed_[v].set(u);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && adj_[u].test(v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

VertexSet closed_neighborhood(const Graph& g, int v) {
    return g.closed_neighbors(v);
}

Graph remove_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw InputError("cannot remove a non-edge");
    Graph h(g.vertex_count());
    for (auto [a, b] : g.edges())
        if (!((a == u && b == v) || (a == v && b == u))) h.add_edge(a, b);
    return h;
}

Graph add_edge_copy(const Graph& g, int u, int v) {
    if (u == v) throw InputError("self-loops are not allowed");
    if (g.has_edge(u, v)) throw InputError("edge already present");
    Graph h = g;
    h.add_edge(u, v);
    return h;
}

VertexDeletion remove_vertex(const Graph& g, int u) {
    const int n = g.vertex_count();
    if (u < 0 || u >= n) throw InputError("vertex index out of range");
    VertexDeletion d;
    d.old_to_new.assign(n, -1);
    d.new_to_old.reserve(n - 1);
    for (int w = 0; w < n; ++w) {
        if (w == u) continue;
        d.old_to_new[w] = static_cast<int>(d.new_to_old.size());
        d.new_to_old.push_back(w);
    }
    d.graph = Graph(n - 1);
    for (auto [a, b] : g.edges())
        if (a != u && b != u) d.graph.add_edge(d.old_to_new[a], d.old_to_new[b]);
    return d;
}

bool is_simplicial(const Graph& g, int v) {
    const VertexSet& nb = g.neighbors(v);
    bool simplicial = true;
    nb.for_each([&](int w) {
        // every other neighbor of v must be adjacent to w
        if (!nb.minus(g.closed_neighbors(w)).none()) simplicial = false;
    });
    return simplicial;
}

bool are_twins(const Graph& g, int u, int v) {
    if (u == v) throw InputError("twin test requires two distinct vertices");
    return g.closed_neighbors(u) == g.closed_neighbors(v);
}

void validate_graph(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.neighbors(v).test(v))
            throw InternalError("graph invariant violated: self-loop");
        g.neighbors(v).for_each([&](int w) {
            if (!g.neighbors(w).test(v))
                throw InternalError("graph invariant violated: asymmetric adjacency");
        });
        VertexSet expected = g.neighbors(v);
        expected.set(v);
        if (!(expected == g.closed_neighbors(v)))
            throw InternalError("graph invariant violated: stale closed neighborhood");
    }
}

}  // namespace grundy
