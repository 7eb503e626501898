#pragma once

#include <functional>
#include <string>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/solver.hpp"

namespace grundy {

/// Optional role labels, normally supplied by a family generator, so tests
/// can address "cycle edge" or "leaf" symbolically.
using EdgeRoleFn = std::function<std::string(int, int)>;
using VertexRoleFn = std::function<std::string(int)>;

struct EdgeRecord {
    int u = 0;
    int v = 0;
    std::string role;
    int gamma_after = 0;
    int delta = 0;
    SolveStatus status = SolveStatus::Exact;

    bool operator==(const EdgeRecord&) const = default;
};

struct EdgeRemovalProfile {
    int gamma_before = 0;
    SolveStatus base_status = SolveStatus::Exact;
    std::vector<EdgeRecord> records;

    bool exact() const;
    bool operator==(const EdgeRemovalProfile&) const = default;
};

struct VertexRecord {
    int vertex = 0;
    std::string role;
    int gamma_after = 0;
    int delta = 0;
    SolveStatus status = SolveStatus::Exact;

    bool operator==(const VertexRecord&) const = default;
};

struct VertexRemovalProfile {
    int gamma_before = 0;
    SolveStatus base_status = SolveStatus::Exact;
    std::vector<VertexRecord> records;

    bool exact() const;
    bool operator==(const VertexRemovalProfile&) const = default;
};

/// gamma_gr(G-e) for every edge, records ordered as Graph::edges(). Every
/// deletion is solved from scratch. When base and element solves are exact,
/// a delta outside {-1, 0, +1} throws InternalError: that range is a proven
/// bound, so leaving it means a solver bug. Inexact solves are propagated
/// in the per-record status instead of being checked.
/// opts.parallel distributes elements across OpenMP workers (each element
/// solve itself stays single-threaded); results are identical to serial.
EdgeRemovalProfile edge_removal_profile(const Graph& g, const SolverOptions& opts = {},
                                        const EdgeRoleFn& role = {});

/// gamma_gr(G-u) for every vertex; deltas must lie in {-2, -1, 0}.
VertexRemovalProfile vertex_removal_profile(const Graph& g,
                                            const SolverOptions& opts = {},
                                            const VertexRoleFn& role = {});

struct KEdgeBoundReport {
    int k = 0;
    int gamma_before = 0;
    int gamma_after = 0;
    int delta = 0;
    SolveStatus base_status = SolveStatus::Exact;
    SolveStatus extended_status = SolveStatus::Exact;

    bool operator==(const KEdgeBoundReport&) const = default;
};

/// Adds the k listed non-edges and compares gamma_gr. |delta| > k with both
/// solves exact throws InternalError.
KEdgeBoundReport check_k_edge_bound(const Graph& g, const std::vector<Edge>& new_edges,
                                    const SolverOptions& opts = {});

struct SimplicialTwinRecord {
    int vertex = 0;
    bool simplicial = false;
    bool twin = false;
    /// Smallest twin partner, -1 when twin is false.
    int twin_partner = -1;
    int gamma_after = 0;
    int delta = 0;
    SolveStatus status = SolveStatus::Exact;

    bool operator==(const SimplicialTwinRecord&) const = default;
};

struct SimplicialTwinReport {
    int gamma_before = 0;
    SolveStatus base_status = SolveStatus::Exact;
    /// One record per vertex that is simplicial, a twin, or both.
    std::vector<SimplicialTwinRecord> records;

    bool exact() const;
    bool operator==(const SimplicialTwinReport&) const = default;
};

/// For every simplicial vertex asserts delta >= -1; for every twin vertex
/// asserts delta = 0. Violations with exact solves throw InternalError.
SimplicialTwinReport check_simplicial_twin(const Graph& g, const SolverOptions& opts = {});

}  // namespace grundy
