#pragma once

#include <cstdint>
#include <optional>

#include "grundy/graph.hpp"
#include "grundy/sequence.hpp"

namespace grundy {

enum class SolveStatus {
    Exact,
    /// The state budget ran out; gamma_gr/witness hold the best legal
    /// dominating sequence found before the abort, a valid lower bound.
    BudgetExceeded,
};

struct SolveStats {
    uint64_t explored_states = 0;
    uint64_t memo_hits = 0;
    uint64_t memo_entries = 0;
    double elapsed_seconds = 0.0;

    bool operator==(const SolveStats&) const = default;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Exact;
    int gamma_gr = 0;
    VertexSequence witness;
    SolveStats stats;

    bool operator==(const SolveResult&) const = default;
};

struct SolverOptions {
    /// Memoized mode: maximum distinct memo insertions. No-memo mode: maximum
    /// expanded search nodes. Unset means unlimited.
    std::optional<uint64_t> budget;
    bool use_memo = true;
    /// Partition top-level branches across OpenMP workers sharing one memo
    /// table. Exact results and witnesses are identical to the serial mode.
    bool parallel = false;
    /// Explore higher-degree vertices first. Changes only the visit order;
    /// values and the reported witness are unaffected.
    bool degree_heuristic = false;
    /// Refuse larger graphs up front; the state space is 2^n.
    int max_vertices = 24;
};

/// Exact gamma_gr(G) with a witness, by depth-first search over legal
/// choices keyed on the dominated-vertex set. The witness is canonical
/// (greedy lowest-index descent through optimal states), so every mode
/// reproduces the same sequence.
SolveResult grundy_domination_number(const Graph& g, const SolverOptions& opts = {});

/// Independent oracle: exhaustively enumerates all legal sequences by
/// backtracking, no memoization, no pruning. Requires g.n <= 12.
SolveResult grundy_brute_force(const Graph& g);

}  // namespace grundy
