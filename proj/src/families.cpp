#include "grundy/families.hpp"

#include <random>

namespace grundy {

Graph make_path(int m) {
    if (m < 1) throw InputError("path needs at least 1 vertex");
    Graph g(m);
    for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(n - 1, 0);
    return g;
}

Graph make_complete(int n) {
    if (n < 1) throw InputError("complete graph needs at least 1 vertex");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_edgeless(int n) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    return Graph(n);
}

std::string HFamily::edge_role(int u, int v) const {
    auto same = [&](Edge e) {
        return (e.first == u && e.second == v) || (e.first == v && e.second == u);
    };
    if (same(pendant_edge)) return "pendant-path-edge";
    for (Edge e : interior_path_edges)
        if (same(e)) return "interior-path-edge";
    for (Edge e : cycle_edges)
        if (same(e)) return "cycle-edge";
    return "";
}

HFamily make_h_family(int m, int n) {
    if (m < 3) throw InputError("H family needs m >= 3");
    if (n < 3) throw InputError("H family needs n >= 3");
    HFamily h;
    h.m = m;
    h.n = n;
    h.graph = Graph(m + n - 1);
    h.pendant_edge = {0, 1};
    for (int v = 0; v + 1 < m; ++v) {
        h.graph.add_edge(v, v + 1);
        if (v > 0) h.interior_path_edges.push_back({v, v + 1});
    }
    // cycle through m-1, m, ..., m+n-2
    for (int v = m - 1; v + 1 <= m + n - 2; ++v) {
        h.graph.add_edge(v, v + 1);
        h.cycle_edges.push_back({v, v + 1});
    }
    h.graph.add_edge(m + n - 2, m - 1);
    h.cycle_edges.push_back({m - 1, m + n - 2});
    return h;
}

std::string GFamily::vertex_role(int v) const {
    if (v == leaf) return "leaf";
    if (v == leaf_neighbor) return "leaf-neighbor";
    if (v == identified) return "identified";
    for (int w : interior_path_vertices)
        if (w == v) return "interior-path";
    for (int w : clique_vertices)
        if (w == v) return "clique";
    return "";
}

GFamily make_g_family(int m, int n) {
    if (m < 4) throw InputError("G family needs m >= 4");
    if (n < 3) throw InputError("G family needs n >= 3");
    GFamily g;
    g.m = m;
    g.n = n;
    g.graph = Graph(m + n - 1);
    for (int v = 0; v + 1 < m; ++v) g.graph.add_edge(v, v + 1);
    for (int u = m - 1; u <= m + n - 2; ++u)
        for (int v = u + 1; v <= m + n - 2; ++v) g.graph.add_edge(u, v);
    g.leaf = 0;
    g.leaf_neighbor = 1;
    g.identified = m - 1;
    for (int v = 2; v <= m - 2; ++v) g.interior_path_vertices.push_back(v);
    for (int v = m; v <= m + n - 2; ++v) g.clique_vertices.push_back(v);
    return g;
}

Graph random_graph(int n, double edge_probability, uint64_t seed) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw InputError("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < edge_probability) g.add_edge(u, v);
    return g;
}

}  // namespace grundy
