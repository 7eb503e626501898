#include "grundy/interval.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

#include "grundy/errors.hpp"

namespace grundy {

namespace {

constexpr int64_t kMantissaLimit = 1000000000000000;  // 10^15
constexpr int kExponentLimit = 12;

int64_t pow10(int e) {
    int64_t v = 1;
    while (e-- > 0) v *= 10;
    return v;
}

}  // namespace

Coord make_coord(int64_t mantissa, int exponent) {
    if (mantissa > kMantissaLimit || mantissa < -kMantissaLimit)
        throw InputError("coordinate mantissa exceeds 10^15");
    if (exponent < 0 || exponent > kExponentLimit)
        throw InputError("coordinate exponent out of range");
    while (exponent > 0 && mantissa % 10 == 0) {
        mantissa /= 10;
        --exponent;
    }
    return {mantissa, exponent};
}

Coord parse_coord(const std::string& token) {
    size_t i = 0;
    bool negative = false;
    if (i < token.size() && (token[i] == '+' || token[i] == '-')) {
        negative = token[i] == '-';
        ++i;
    }
    int64_t mantissa = 0;
    int exponent = 0;
    bool any_digit = false;
    bool seen_dot = false;
    for (; i < token.size(); ++i) {
        char c = token[i];
        if (c == '.') {
            if (seen_dot) throw InputError("malformed decimal '" + token + "'");
            seen_dot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InputError("malformed decimal '" + token + "'");
        any_digit = true;
        if (mantissa > (kMantissaLimit - (c - '0')) / 10)
            throw InputError("coordinate '" + token + "' exceeds 10^15 precision");
        mantissa = mantissa * 10 + (c - '0');
        if (seen_dot && ++exponent > kExponentLimit)
            throw InputError("coordinate '" + token + "' has more than 12 decimals");
    }
    if (!any_digit) throw InputError("malformed decimal '" + token + "'");
    return make_coord(negative ? -mantissa : mantissa, exponent);
}

std::string format_coord(const Coord& c) {
    if (c.exponent == 0) return std::to_string(c.mantissa);
    std::string digits = std::to_string(c.mantissa < 0 ? -c.mantissa : c.mantissa);
    if (static_cast<int>(digits.size()) <= c.exponent)
        digits.insert(0, c.exponent + 1 - digits.size(), '0');
    digits.insert(digits.size() - c.exponent, ".");
    return (c.mantissa < 0 ? "-" : "") + digits;
}

int compare(const Coord& x, const Coord& y) {
    const __int128 lhs = static_cast<__int128>(x.mantissa) * pow10(y.exponent);
    const __int128 rhs = static_cast<__int128>(y.mantissa) * pow10(x.exponent);
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

IntervalModel::IntervalModel(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
    for (size_t i = 0; i < intervals_.size(); ++i)
        if (intervals_[i].right < intervals_[i].left)
            throw InputError("interval " + std::to_string(i) +
                             " has left endpoint greater than right endpoint");
    by_right_.resize(intervals_.size());
    std::iota(by_right_.begin(), by_right_.end(), 0);
    std::stable_sort(by_right_.begin(), by_right_.end(), [&](int a, int b) {
        return intervals_[a].right < intervals_[b].right;
    });
}

const Interval& IntervalModel::interval(int v) const {
    if (v < 0 || v >= size()) throw InputError("interval index out of range");
    return intervals_[v];
}

EndpointSequence build_endpoint_sequence(const IntervalModel& m) {
    EndpointSequence events;
    events.reserve(2 * m.size());
    for (int v = 0; v < m.size(); ++v) {
        events.push_back({EventKind::Left, v, m.interval(v).left});
        events.push_back({EventKind::Right, v, m.interval(v).right});
    }
    std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) {
        if (int c = compare(x.coord, y.coord)) return c < 0;
        if (x.kind != y.kind) return x.kind == EventKind::Left;
        return x.vertex < y.vertex;
    });
    return events;
}

VertexSequence grundy_interval(const IntervalModel& m) {
    VertexSequence out;
    bool new_interval = false;
    for (const Event& e : build_endpoint_sequence(m)) {
        if (e.kind == EventKind::Left) {
            new_interval = true;
        } else if (new_interval) {
            out.push_back(e.vertex);
            new_interval = false;
        }
    }
    return out;
}

int count_ab_pairs(const EndpointSequence& e) {
    int pairs = 0;
    for (size_t k = 0; k + 1 < e.size(); ++k)
        if (e[k].kind == EventKind::Left && e[k + 1].kind == EventKind::Right) ++pairs;
    return pairs;
}

Graph intersection_graph(const IntervalModel& m) {
    Graph g(m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j)
            if (m.interval(i).left <= m.interval(j).right &&
                m.interval(j).left <= m.interval(i).right)
                g.add_edge(i, j);
    return g;
}

IntervalModel random_interval_model(int n, uint64_t seed) {
    if (n < 1) throw InputError("random interval model needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Interval> intervals;
    intervals.reserve(n);
    const bool grid = seed % 2 == 0;
    for (int i = 0; i < n; ++i) {
        Coord a, b;
        if (grid) {
            a = make_coord(static_cast<int64_t>(rng() % 4));
            b = make_coord(static_cast<int64_t>(rng() % 4));
        } else {
            a = make_coord(static_cast<int64_t>(rng() % 1000000001), 6);
            b = make_coord(static_cast<int64_t>(rng() % 1000000001), 6);
        }
        if (b < a) std::swap(a, b);
        intervals.push_back({a, b});
    }
    return IntervalModel(std::move(intervals));
}

}  // namespace grundy
