#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

/// Path on m vertices 0-1-...-(m-1). m >= 1.
Graph make_path(int m);

/// Cycle on n vertices 0-1-...-(n-1)-0. n >= 3.
Graph make_cycle(int n);

/// Complete graph on n vertices. n >= 1.
Graph make_complete(int n);

/// Graph on n vertices with no edges. n >= 0.
Graph make_edgeless(int n);

/// P_m with one degree-1 endpoint identified with a vertex of C_n.
/// Vertices 0..m-1 form the path (0 is the free end); the cycle runs
/// m-1, m, ..., m+n-2 back to m-1. Total m+n-1 vertices.
struct HFamily {
    Graph graph;
    int m = 0;
    int n = 0;
    Edge pendant_edge;                     // incident to the degree-1 vertex
    std::vector<Edge> interior_path_edges; // path edges other than the pendant edge
    std::vector<Edge> cycle_edges;

    /// Role of edge (u, v); empty string when (u, v) is not an edge.
    std::string edge_role(int u, int v) const;
};

/// m >= 3, n >= 3.
HFamily make_h_family(int m, int n);

/// P_m with one degree-1 endpoint identified with a vertex of K_n.
/// Vertices 0..m-1 form the path (0 is the free end); vertex m-1 is the
/// identified clique vertex, m..m+n-2 are the remaining clique vertices.
struct GFamily {
    Graph graph;
    int m = 0;
    int n = 0;
    int leaf = 0;                           // the degree-1 path end
    int leaf_neighbor = 0;
    int identified = 0;
    std::vector<int> interior_path_vertices; // path vertices other than leaf, its neighbor, identified
    std::vector<int> clique_vertices;        // clique vertices other than the identified one

    std::string vertex_role(int v) const;
};

/// m >= 4, n >= 3.
GFamily make_g_family(int m, int n);

/// Erdős–Rényi style graph; deterministic for a fixed seed.
Graph random_graph(int n, double edge_probability, uint64_t seed);

}  // namespace grundy
