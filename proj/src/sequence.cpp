#include "grundy/sequence.hpp"

#include <string>
#include <unordered_set>

namespace grundy {

namespace {

void check_entries(const Graph& g, const VertexSequence& s) {
    for (int v : s)
        if (v < 0 || v >= g.vertex_count())
            throw InputError("sequence entry " + std::to_string(v) + " out of range");
}

}  // namespace

LegalityReport check_legal(const Graph& g, const VertexSequence& s) {
    check_entries(g, s);
    LegalityReport report;
    report.step_footprints.reserve(s.size());
    VertexSet dominated(g.vertex_count());
    for (size_t i = 0; i < s.size(); ++i) {
        VertexSet step = g.closed_neighbors(s[i]).minus(dominated);
        report.step_footprints.push_back(step);
        if (step.none()) {
            report.legal = false;
            report.first_illegal = static_cast<int>(i);
            break;
        }
        dominated |= step;
    }
    return report;
}

FootprintMap footprint_map(const Graph& g, const VertexSequence& s) {
    LegalityReport report = check_legal(g, s);
    if (!report.legal)
        throw InputError("sequence is illegal at position " +
                         std::to_string(report.first_illegal));
    FootprintMap fm;
    fm.footprinter.assign(g.vertex_count(), -1);
    for (size_t i = 0; i < s.size(); ++i)
        report.step_footprints[i].for_each([&](int u) { fm.footprinter[u] = s[i]; });
    for (int u = 0; u < g.vertex_count(); ++u)
        if (fm.footprinter[u] < 0)
            throw InputError("sequence does not dominate vertex " + std::to_string(u));
    return fm;
}

bool is_dominating(const Graph& g, const VertexSet& set) {
    VertexSet covered(g.vertex_count());
    set.for_each([&](int v) { covered |= g.closed_neighbors(v); });
    return covered == VertexSet::full(g.vertex_count());
}

bool is_dominating_sequence(const Graph& g, const VertexSequence& s) {
    return is_dominating(g, sequence_set(g, s));
}

VertexSet sequence_set(const Graph& g, const VertexSequence& s) {
    check_entries(g, s);
    VertexSet set(g.vertex_count());
    for (int v : s) {
        if (set.test(v))
            throw InputError("sequence repeats vertex " + std::to_string(v));
        set.set(v);
    }
    return set;
}

VertexSequence extend_to_dominating(const Graph& g, VertexSequence s) {
    LegalityReport report = check_legal(g, s);
    if (!report.legal)
        throw InputError("cannot extend an illegal sequence (illegal at position " +
                         std::to_string(report.first_illegal) + ")");
    VertexSet dominated(g.vertex_count());
    for (const VertexSet& step : report.step_footprints) dominated |= step;
    const VertexSet all = VertexSet::full(g.vertex_count());
    while (!(dominated == all)) {
        // an undominated vertex always yields a legal choice, so this terminates
        for (int v = 0; v < g.vertex_count(); ++v) {
            VertexSet gain = g.closed_neighbors(v).minus(dominated);
            if (gain.none()) continue;
            s.push_back(v);
            dominated |= gain;
            break;
        }
    }
    return s;
}

VertexSequence concatenate(const VertexSequence& s1, const VertexSequence& s2) {
    VertexSequence out = s1;
    out.insert(out.end(), s2.begin(), s2.end());
    std::unordered_set<int> seen;
    for (int v : out)
        if (!seen.insert(v).second)
            throw InputError("concatenation repeats vertex " + std::to_string(v));
    return out;
}

}  // namespace grundy
