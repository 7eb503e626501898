#include <doctest.h>

#include <string>
#include <vector>

#include "grundy/errors.hpp"
#include "grundy/families.hpp"
#include "grundy/interval.hpp"
#include "grundy/sequence.hpp"
#include "grundy/solver.hpp"

using namespace grundy;

namespace {

IntervalModel model_from_ints(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Interval> intervals;
    intervals.reserve(pairs.size());
    for (auto [a, b] : pairs) intervals.push_back({make_coord(a), make_coord(b)});
    return IntervalModel(std::move(intervals));
}

// The five-interval reference model: [0,2], [-1,4], [1,5], [3,7], [6,8].
IntervalModel reference_model() {
    return model_from_ints({{0, 2}, {-1, 4}, {1, 5}, {3, 7}, {6, 8}});
}

}  // namespace

TEST_CASE("coord parsing and formatting") {
    CHECK(parse_coord("3") == make_coord(3));
    CHECK(parse_coord("-12") == make_coord(-12));
    CHECK(parse_coord("3.50") == make_coord(35, 1));
    CHECK(parse_coord("0.000001") == make_coord(1, 6));
    CHECK(parse_coord("-0.25") == make_coord(-25, 2));

    CHECK(format_coord(parse_coord("3.50")) == "3.5");
    CHECK(format_coord(make_coord(0)) == "0");
    CHECK(format_coord(make_coord(-25, 2)) == "-0.25");
    CHECK(format_coord(make_coord(1, 6)) == "0.000001");
    CHECK(format_coord(parse_coord("10.0")) == "10");

    for (const char* tok :
         {"", "1.2.3", "abc", "1a", ".", "-", "0.0000000000001", "12345678901234567"})
        CHECK_THROWS_AS(parse_coord(tok), InputError);
}

TEST_CASE("coord comparison is exact across scales") {
    CHECK(compare(make_coord(1), make_coord(1000000, 6)) == 0);
    CHECK(parse_coord("0.5") == parse_coord("0.500000"));
    CHECK(parse_coord("-1") < parse_coord("0.5"));
    CHECK(parse_coord("0.1") < parse_coord("0.12"));
    CHECK(compare(parse_coord("2"), parse_coord("1.999999")) == 1);
    CHECK(parse_coord("-0.3") < parse_coord("-0.2"));
    CHECK(make_coord(0) == make_coord(0, 0));
}

TEST_CASE("make_coord validates its range") {
    CHECK_THROWS_AS(make_coord(1, -1), InputError);
    CHECK_THROWS_AS(make_coord(1, 13), InputError);
    CHECK_THROWS_AS(make_coord(int64_t{1000000000000001}), InputError);
    CHECK(make_coord(1000000000000000).mantissa == 1000000000000000);
    CHECK(make_coord(100, 2) == make_coord(1));
}

TEST_CASE("interval model validation and right-endpoint order") {
    CHECK_THROWS_AS(model_from_ints({{2, 1}}), InputError);

    const IntervalModel m = reference_model();
    CHECK(m.size() == 5);
    CHECK(m.by_right() == std::vector<int>{0, 1, 2, 3, 4});

    // Stable on index for tied right endpoints.
    const IntervalModel tied = model_from_ints({{0, 3}, {1, 3}, {2, 3}});
    CHECK(tied.by_right() == std::vector<int>{0, 1, 2});

    const IntervalModel mixed = model_from_ints({{0, 9}, {1, 2}, {3, 4}});
    CHECK(mixed.by_right() == std::vector<int>{1, 2, 0});

    CHECK_THROWS_AS(m.interval(5), InputError);

    // Degenerate points are valid intervals.
    const IntervalModel point = model_from_ints({{1, 1}});
    CHECK(point.interval(0).left == point.interval(0).right);
}

TEST_CASE("reference model endpoint sequence is frozen") {
    const EndpointSequence e = build_endpoint_sequence(reference_model());
    const EndpointSequence expected{
        {EventKind::Left, 1, make_coord(-1)}, {EventKind::Left, 0, make_coord(0)},
        {EventKind::Left, 2, make_coord(1)},  {EventKind::Right, 0, make_coord(2)},
        {EventKind::Left, 3, make_coord(3)},  {EventKind::Right, 1, make_coord(4)},
        {EventKind::Right, 2, make_coord(5)}, {EventKind::Left, 4, make_coord(6)},
        {EventKind::Right, 3, make_coord(7)}, {EventKind::Right, 4, make_coord(8)}};
    CHECK(e == expected);
}

TEST_CASE("reference model sweep output") {
    const IntervalModel m = reference_model();
    CHECK(grundy_interval(m) == VertexSequence{0, 1, 3});
    CHECK(count_ab_pairs(build_endpoint_sequence(m)) == 3);

    const Graph g = intersection_graph(m);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2},
                                                        {1, 3}, {2, 3}, {3, 4}});
    CHECK(grundy_domination_number(g).gamma_gr == 3);
}

TEST_CASE("first output vertex has the smallest right endpoint") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        const IntervalModel m = random_interval_model(1 + static_cast<int>(seed % 9), seed);
        const VertexSequence s = grundy_interval(m);
        REQUIRE_FALSE(s.empty());
        CHECK(s.front() == m.by_right().front());
    }
}

TEST_CASE("touching endpoints produce an edge and a single move") {
    const IntervalModel m = model_from_ints({{0, 1}, {1, 2}});
    CHECK(intersection_graph(m).has_edge(0, 1));
    CHECK(grundy_interval(m) == VertexSequence{0});
    CHECK(count_ab_pairs(build_endpoint_sequence(m)) == 1);
}

TEST_CASE("identical intervals collapse to one move") {
    const IntervalModel m = model_from_ints({{0, 1}, {0, 1}, {0, 1}});
    CHECK(intersection_graph(m) == make_complete(3));
    CHECK(grundy_interval(m).size() == 1);
}

TEST_CASE("disjoint intervals need every vertex") {
    const IntervalModel m = model_from_ints({{0, 1}, {2, 3}, {4, 5}});
    CHECK(intersection_graph(m).edge_count() == 0);
    CHECK(grundy_interval(m) == VertexSequence{0, 1, 2});
}

TEST_CASE("nested intervals form a star") {
    const IntervalModel m = model_from_ints({{0, 10}, {1, 2}, {3, 4}});
    const Graph g = intersection_graph(m);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(grundy_interval(m).size() == 2);
}

TEST_CASE("sweep output is always legal and dominating, and matches the solver") {
    for (uint64_t seed = 100; seed < 160; ++seed) {
        const int n = 1 + static_cast<int>(seed % 11);
        const IntervalModel m = random_interval_model(n, seed);
        const Graph g = intersection_graph(m);
        const VertexSequence s = grundy_interval(m);
        CHECK(check_legal(g, s).legal);
        CHECK(is_dominating_sequence(g, s));
        CHECK(static_cast<int>(s.size()) == count_ab_pairs(build_endpoint_sequence(m)));
        CHECK(static_cast<int>(s.size()) == grundy_domination_number(g).gamma_gr);
    }
}

TEST_CASE("translation and scaling leave the output unchanged") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        const int n = 2 + static_cast<int>(seed % 7);
        const IntervalModel m = random_interval_model(n, 2 * seed);  // grid model
        const VertexSequence base = grundy_interval(m);

        std::vector<Interval> translated, scaled;
        for (const Interval& iv : m.intervals()) {
            // Grid coordinates are small integers, so these stay in range.
            translated.push_back({make_coord(iv.left.mantissa + 7, iv.left.exponent),
                                  make_coord(iv.right.mantissa + 7, iv.right.exponent)});
            scaled.push_back({make_coord(iv.left.mantissa * 10, iv.left.exponent),
                              make_coord(iv.right.mantissa * 10, iv.right.exponent)});
        }
        CHECK(grundy_interval(IntervalModel(translated)) == base);
        CHECK(grundy_interval(IntervalModel(scaled)) == base);
    }
}

TEST_CASE("random models are deterministic and respect their regimes") {
    CHECK(random_interval_model(6, 42).intervals().size() == 6);
    const IntervalModel a = random_interval_model(6, 42);
    const IntervalModel b = random_interval_model(6, 42);
    for (int v = 0; v < 6; ++v) {
        CHECK(a.interval(v).left == b.interval(v).left);
        CHECK(a.interval(v).right == b.interval(v).right);
    }

    const IntervalModel grid = random_interval_model(20, 8);
    for (const Interval& iv : grid.intervals()) {
        CHECK(iv.left.exponent == 0);
        CHECK(iv.left.mantissa >= 0);
        CHECK(iv.right.mantissa <= 3);
    }

    const IntervalModel fine = random_interval_model(20, 9);
    for (const Interval& iv : fine.intervals()) {
        CHECK(iv.left.exponent <= 6);
        CHECK(compare(iv.right, make_coord(1000)) <= 0);
    }

    CHECK_THROWS_AS(random_interval_model(0, 1), InputError);
}

TEST_CASE("grid models actually produce coordinate ties") {
    // The even-seed regime draws from {0..3}, so collisions are guaranteed
    // once a model has more than a few intervals.
    const IntervalModel m = random_interval_model(10, 4);
    const EndpointSequence e = build_endpoint_sequence(m);
    bool tie = false;
    for (size_t i = 1; i < e.size(); ++i)
        if (e[i].coord == e[i - 1].coord) tie = true;
    CHECK(tie);
}
