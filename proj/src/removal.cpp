#include "grundy/removal.hpp"

#include <algorithm>
#include <exception>
#include <string>

#include "grundy/errors.hpp"

namespace grundy {

namespace {

bool both_exact(SolveStatus a, SolveStatus b) {
    return a == SolveStatus::Exact && b == SolveStatus::Exact;
}

SolverOptions element_options(const SolverOptions& opts) {
    SolverOptions inner = opts;
    inner.parallel = false;  // parallelism lives at the per-element loop
    return inner;
}

/// Runs fn(i) for i in [0, count), optionally across OpenMP workers.
/// The first thrown exception is rethrown after the loop so the report
/// stays all-or-nothing.
template <typename F>
void for_each_element(int count, bool parallel, F&& fn) {
    std::exception_ptr error;
#ifdef GRUNDY_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
#endif
    for (int i = 0; i < count; ++i) {
        try {
            fn(i);
        } catch (...) {
#ifdef GRUNDY_HAVE_OPENMP
#pragma omp critical(grundy_removal_error)
#endif
            if (!error) error = std::current_exception();
        }
    }
    (void)parallel;
    if (error) std::rethrow_exception(error);
}

}  // namespace

bool EdgeRemovalProfile::exact() const {
    if (base_status != SolveStatus::Exact) return false;
    return std::all_of(records.begin(), records.end(),
                       [](const EdgeRecord& r) { return r.status == SolveStatus::Exact; });
}

bool VertexRemovalProfile::exact() const {
    if (base_status != SolveStatus::Exact) return false;
    return std::all_of(records.begin(), records.end(), [](const VertexRecord& r) {
        return r.status == SolveStatus::Exact;
    });
}

bool SimplicialTwinReport::exact() const {
    if (base_status != SolveStatus::Exact) return false;
    return std::all_of(records.begin(), records.end(),
                       [](const SimplicialTwinRecord& r) {
                           return r.status == SolveStatus::Exact;
                       });
}

EdgeRemovalProfile edge_removal_profile(const Graph& g, const SolverOptions& opts,
                                        const EdgeRoleFn& role) {
    const SolverOptions inner = element_options(opts);
    const SolveResult base = grundy_domination_number(g, inner);
    const std::vector<Edge> edges = g.edges();

    EdgeRemovalProfile profile;
    profile.gamma_before = base.gamma_gr;
    profile.base_status = base.status;
    profile.records.resize(edges.size());

    for_each_element(static_cast<int>(edges.size()), opts.parallel, [&](int i) {
        const auto [u, v] = edges[i];
        const SolveResult r = grundy_domination_number(remove_edge(g, u, v), inner);
        EdgeRecord& rec = profile.records[i];
        rec.u = u;
        rec.v = v;
        if (role) rec.role = role(u, v);
        rec.gamma_after = r.gamma_gr;
        rec.delta = r.gamma_gr - base.gamma_gr;
        rec.status = r.status;
        if (both_exact(base.status, r.status) && (rec.delta < -1 || rec.delta > 1))
            throw InternalError("edge deletion delta " + std::to_string(rec.delta) +
                                " outside the proven range [-1, 1]");
    });
    return profile;
}

VertexRemovalProfile vertex_removal_profile(const Graph& g, const SolverOptions& opts,
                                            const VertexRoleFn& role) {
    const SolverOptions inner = element_options(opts);
    const SolveResult base = grundy_domination_number(g, inner);

    VertexRemovalProfile profile;
    profile.gamma_before = base.gamma_gr;
    profile.base_status = base.status;
    profile.records.resize(g.vertex_count());

    for_each_element(g.vertex_count(), opts.parallel, [&](int u) {
        const SolveResult r = grundy_domination_number(remove_vertex(g, u).graph, inner);
        VertexRecord& rec = profile.records[u];
        rec.vertex = u;
        if (role) rec.role = role(u);
        rec.gamma_after = r.gamma_gr;
        rec.delta = r.gamma_gr - base.gamma_gr;
        rec.status = r.status;
        if (both_exact(base.status, r.status) && (rec.delta < -2 || rec.delta > 0))
            throw InternalError("vertex deletion delta " + std::to_string(rec.delta) +
                                " outside the proven range [-2, 0]");
    });
    return profile;
}

KEdgeBoundReport check_k_edge_bound(const Graph& g, const std::vector<Edge>& new_edges,
                                    const SolverOptions& opts) {
    const SolverOptions inner = element_options(opts);
    Graph extended = g;
    for (const auto& [u, v] : new_edges) extended = add_edge_copy(extended, u, v);

    const SolveResult base = grundy_domination_number(g, inner);
    const SolveResult after = grundy_domination_number(extended, inner);

    KEdgeBoundReport report;
    report.k = static_cast<int>(new_edges.size());
    report.gamma_before = base.gamma_gr;
    report.gamma_after = after.gamma_gr;
    report.delta = after.gamma_gr - base.gamma_gr;
    report.base_status = base.status;
    report.extended_status = after.status;
    if (both_exact(base.status, after.status) &&
        (report.delta > report.k || report.delta < -report.k))
        throw InternalError("adding " + std::to_string(report.k) +
                            " edges moved gamma_gr by " + std::to_string(report.delta));
    return report;
}

SimplicialTwinReport check_simplicial_twin(const Graph& g, const SolverOptions& opts) {
    const SolverOptions inner = element_options(opts);
    const SolveResult base = grundy_domination_number(g, inner);

    SimplicialTwinReport report;
    report.gamma_before = base.gamma_gr;
    report.base_status = base.status;

    std::vector<SimplicialTwinRecord> candidates;
    for (int u = 0; u < g.vertex_count(); ++u) {
        SimplicialTwinRecord rec;
        rec.vertex = u;
        rec.simplicial = is_simplicial(g, u);
        for (int w = 0; w < g.vertex_count() && !rec.twin; ++w)
            if (w != u && are_twins(g, u, w)) {
                rec.twin = true;
                rec.twin_partner = w;
            }
        if (rec.simplicial || rec.twin) candidates.push_back(rec);
    }
    report.records = std::move(candidates);

    for_each_element(static_cast<int>(report.records.size()), opts.parallel, [&](int i) {
        SimplicialTwinRecord& rec = report.records[i];
        const SolveResult r =
            grundy_domination_number(remove_vertex(g, rec.vertex).graph, inner);
        rec.gamma_after = r.gamma_gr;
        rec.delta = r.gamma_gr - base.gamma_gr;
        rec.status = r.status;
        if (both_exact(base.status, r.status)) {
            if (rec.twin && rec.delta != 0)
                throw InternalError("removing twin vertex " + std::to_string(rec.vertex) +
                                    " changed gamma_gr by " + std::to_string(rec.delta));
            if (rec.simplicial && rec.delta < -1)
                throw InternalError("removing simplicial vertex " +
                                    std::to_string(rec.vertex) + " changed gamma_gr by " +
                                    std::to_string(rec.delta));
        }
    });
    return report;
}

}  // namespace grundy
