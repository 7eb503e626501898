#pragma once

#include <span>
#include <utility>
#include <vector>

#include "grundy/vertex_set.hpp"

namespace grundy {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with per-vertex adjacency
/// bitsets. Adjacency is symmetric and irreflexive. Graphs are values:
/// deletion operations return modified copies.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    /// Valid only during construction; keeps N(v) and N[v] in sync.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;

    /// Open neighborhood N(v).
    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    /// Closed neighborhood N[v] = N(v) ∪ {v}.
    const VertexSet& closed_neighbors(int v) const {
        check_vertex(v);
        return closed_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return adj_[v].count();
    }

    /// All edges as (u, v) with u < v, sorted ascending.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw InputError("vertex index out of range");
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<VertexSet> closed_;
};

VertexSet closed_neighborhood(const Graph& g, int v);

/// G - e. The edge must exist.
Graph remove_edge(const Graph& g, int u, int v);

/// G + e. The edge must not exist.
Graph add_edge_copy(const Graph& g, int u, int v);

struct VertexDeletion {
    Graph graph;
    /// old_to_new[w] is w's index in the reduced graph, -1 for the deleted vertex.
    std::vector<int> old_to_new;
    /// new_to_old[w'] is the original index of surviving vertex w'.
    std::vector<int> new_to_old;
};

/// G - u, with surviving vertices reindexed 0..n-2 in original relative order.
VertexDeletion remove_vertex(const Graph& g, int u);

/// True iff N(v) induces a complete graph.
bool is_simplicial(const Graph& g, int v);

/// True iff N[u] = N[v] (closed twins). Requires u != v.
bool are_twins(const Graph& g, int u, int v);

/// Symmetry and irreflexivity check; throws InternalError on violation.
void validate_graph(const Graph& g);

}  // namespace grundy
