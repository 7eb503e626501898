#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/sequence.hpp"

namespace grundy {

/// Exact decimal coordinate: value = mantissa / 10^exponent. Comparisons
/// cross-multiply in 128 bits, so equality of endpoints is decidable; the
/// parse limits (|mantissa| <= 10^15, exponent <= 12) keep the products in
/// range.
struct Coord {
    int64_t mantissa = 0;
    int exponent = 0;
};

Coord make_coord(int64_t mantissa, int exponent = 0);
Coord parse_coord(const std::string& token);
std::string format_coord(const Coord& c);

/// -1, 0, +1 for x < y, x = y, x > y.
int compare(const Coord& x, const Coord& y);

inline bool operator==(const Coord& x, const Coord& y) { return compare(x, y) == 0; }
inline bool operator!=(const Coord& x, const Coord& y) { return compare(x, y) != 0; }
inline bool operator<(const Coord& x, const Coord& y) { return compare(x, y) < 0; }
inline bool operator<=(const Coord& x, const Coord& y) { return compare(x, y) <= 0; }

struct Interval {
    Coord left;
    Coord right;
};

/// Closed intervals [left_i, right_i] indexed by vertex, plus the stable
/// permutation sorting vertices by right endpoint.
class IntervalModel {
public:
    explicit IntervalModel(std::vector<Interval> intervals);

    int size() const { return static_cast<int>(intervals_.size()); }
    const Interval& interval(int v) const;
    const std::vector<Interval>& intervals() const { return intervals_; }

    /// Vertices in non-decreasing right-endpoint order, ties by index.
    const std::vector<int>& by_right() const { return by_right_; }

private:
    std::vector<Interval> intervals_;
    std::vector<int> by_right_;
};

enum class EventKind { Left, Right };

struct Event {
    EventKind kind = EventKind::Left;
    int vertex = 0;
    Coord coord;

    bool operator==(const Event& o) const {
        return kind == o.kind && vertex == o.vertex && coord == o.coord;
    }
};

/// The interval endpoints sequence A_{I_G}: all 2n events ordered by
/// coordinate, Left before Right at equal coordinates, index ascending
/// among same-kind ties.
using EndpointSequence = std::vector<Event>;

EndpointSequence build_endpoint_sequence(const IntervalModel& m);

/// Algorithm: sweep the endpoint sequence; a Left event arms a flag and a
/// Right event with the flag armed appends its vertex and disarms it. The
/// result is a Grundy dominating sequence of the intersection graph,
/// reported in original vertex indices.
VertexSequence grundy_interval(const IntervalModel& m);

/// Number of adjacent (Left, Right) event pairs; equals gamma_gr of the
/// intersection graph.
int count_ab_pairs(const EndpointSequence& e);

/// Edge ij iff the closed intervals of i and j intersect.
Graph intersection_graph(const IntervalModel& m);

/// Deterministic test models. Even seeds draw endpoints from the integer
/// grid {0..3} to force ties; odd seeds draw 6-decimal values in [0, 1000].
IntervalModel random_interval_model(int n, uint64_t seed);

}  // namespace grundy
