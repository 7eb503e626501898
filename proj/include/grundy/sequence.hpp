#pragma once

#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

/// Ordered list of vertex indices. Distinctness is a checked property, not a
/// structural guarantee: check_legal rejects a repeat at its second
/// occurrence, because a repeated vertex necessarily footprints nothing.
using VertexSequence = std::vector<int>;

struct LegalityReport {
    bool legal = true;
    /// 0-based position of the first illegal entry; -1 when legal.
    int first_illegal = -1;
    /// Per-step footprinted sets N[v_i] \ ∪_{j<i} N[v_j], up to and
    /// including the violating step.
    std::vector<VertexSet> step_footprints;

    bool operator==(const LegalityReport&) const = default;
};

/// The empty sequence is legal.
LegalityReport check_legal(const Graph& g, const VertexSequence& s);

struct FootprintMap {
    /// footprinter[u] = the sequence entry that footprints u.
    std::vector<int> footprinter;
};

/// Requires s legal and dominating; throws InputError naming an
/// undominated vertex otherwise.
FootprintMap footprint_map(const Graph& g, const VertexSequence& s);

/// True iff the union of closed neighborhoods over the set covers V(G).
bool is_dominating(const Graph& g, const VertexSet& set);

bool is_dominating_sequence(const Graph& g, const VertexSequence& s);

/// The set {v : v in s}; validates ranges and distinctness.
VertexSet sequence_set(const Graph& g, const VertexSequence& s);

/// Greedily appends the lowest-index legal vertex until the sequence
/// dominates. Input must be legal; an already-dominating sequence is
/// returned unchanged.
VertexSequence extend_to_dominating(const Graph& g, VertexSequence s);

/// s1 ⊕ s2; throws InputError if the result repeats a vertex.
VertexSequence concatenate(const VertexSequence& s1, const VertexSequence& s2);

}  // namespace grundy
