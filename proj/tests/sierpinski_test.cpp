#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "grundy/errors.hpp"
#include "grundy/families.hpp"
#include "grundy/sequence.hpp"
#include "grundy/sierpinski.hpp"
#include "grundy/solver.hpp"

using namespace grundy;

namespace {

std::vector<std::string> labels_of(const LabelSequence& seq) {
    std::vector<std::string> out;
    out.reserve(seq.size());
    for (size_t k = 0; k < seq.size(); ++k) out.push_back(format_label(seq.label(k)));
    return out;
}

}  // namespace

TEST_CASE("closed form values") {
    CHECK(grundy_formula(3, 2) == 6);
    CHECK(grundy_formula(3, 3) == 21);
    CHECK(grundy_formula(4, 3) == 46);
    CHECK(grundy_formula(2, 3) == 7);
    for (int p = 1; p <= 10; ++p) CHECK(grundy_formula(p, 1) == 1);
    for (int n = 1; n <= 8; ++n) CHECK(grundy_formula(1, n) == 1);
}

TEST_CASE("closed form overflow and validation") {
    CHECK_THROWS_AS(grundy_formula(16, 17), InputError);
    CHECK_THROWS_AS(grundy_formula(0, 2), InputError);
    CHECK_THROWS_AS(grundy_formula(3, 0), InputError);
    // The closed form itself has no byte-representation cap; only the
    // label-producing functions do.
    CHECK(grundy_formula(300, 2) == 300 + 300 * 299 / 2);
}

TEST_CASE("a sequence frozen values") {
    CHECK(labels_of(a_sequence(3, 2)) ==
          std::vector<std::string>{"00", "01", "02", "10", "12", "20"});

    const LabelSequence a33 = a_sequence(3, 3);
    CHECK(a33.size() == 21);
    const std::vector<std::string> all = labels_of(a33);
    const std::vector<std::string> head(all.begin(), all.begin() + 9);
    CHECK(head == std::vector<std::string>{"000", "001", "002", "010", "012", "020",
                                           "011", "022", "100"});

    const std::vector<size_t> sizes{1, 6, 21, 66, 201, 606, 1821, 5466};
    for (int n = 1; n <= 8; ++n) {
        CHECK(a_sequence(3, n).size() == sizes[n - 1]);
        CHECK(a_sequence(3, n).size() == grundy_formula(3, n));
    }

    CHECK(labels_of(a_sequence(1, 4)) == std::vector<std::string>{"0000"});
    CHECK(labels_of(a_sequence(2, 1)) == std::vector<std::string>{"0"});
}

TEST_CASE("a sequence labels are distinct") {
    for (auto [p, n] : {std::pair{3, 4}, {4, 3}, {5, 2}}) {
        const std::vector<std::string> all = labels_of(a_sequence(p, n));
        CHECK(std::set<std::string>(all.begin(), all.end()).size() == all.size());
    }
}

TEST_CASE("b sequence frozen values") {
    CHECK(labels_of(b_sequence(0, 3, 2)) == std::vector<std::string>{"01", "02"});
    CHECK(labels_of(b_sequence(0, 3, 3)) == std::vector<std::string>{"011", "022"});
    CHECK(labels_of(b_sequence(1, 3, 2)) == std::vector<std::string>{"12"});
    CHECK(b_sequence(2, 3, 2).size() == 0);
    CHECK(b_sequence(4, 5, 3).size() == 0);

    CHECK_THROWS_AS(b_sequence(0, 3, 1), InputError);
    CHECK_THROWS_AS(b_sequence(3, 3, 2), InputError);
    CHECK_THROWS_AS(b_sequence(-1, 3, 2), InputError);
}

TEST_CASE("a sequence recursion: copies then linking tails") {
    // A_p^n starts with the 0-shifted copy of A_p^(n-1) followed by B_0^n,
    // then the same for shift 1, and so on.
    const int p = 4, n = 3;
    const std::vector<std::string> prev = labels_of(a_sequence(p, n - 1));
    const std::vector<std::string> full = labels_of(a_sequence(p, n));
    size_t pos = 0;
    for (int i = 0; i < p; ++i) {
        for (const std::string& s : prev) {
            CHECK(full.at(pos) == std::to_string(i) + s);
            ++pos;
        }
        for (const std::string& s : labels_of(b_sequence(i, p, n))) {
            CHECK(full.at(pos) == s);
            ++pos;
        }
    }
    CHECK(pos == full.size());
}

TEST_CASE("parallel generation is byte identical") {
    for (auto [p, n] : {std::pair{3, 5}, {4, 4}, {5, 3}, {2, 10}, {1, 3}}) {
        const LabelSequence serial = a_sequence(p, n);
        const LabelSequence parallel = a_sequence_parallel(p, n);
        CHECK(serial == parallel);
        CHECK(serial.data() == parallel.data());
    }
}

TEST_CASE("l sequence membership") {
    CHECK(in_l_sequence(parse_label("000", 3)));
    CHECK(in_l_sequence(parse_label("011", 3)));
    CHECK_FALSE(in_l_sequence(parse_label("021", 3)));
    CHECK_FALSE(in_l_sequence(parse_label("11", 3)));
    CHECK(in_l_sequence(parse_label("12", 3)));
    CHECK(in_l_sequence(parse_label("0", 5)));
    CHECK_FALSE(in_l_sequence(parse_label("3", 5)));
}

TEST_CASE("l sequence is the increasing enumeration of members") {
    for (auto [p, n] : {std::pair{3, 3}, {4, 2}, {2, 5}}) {
        const LabelSequence l = l_sequence(p, n);
        CHECK(l.size() == grundy_formula(p, n));
        uint64_t prev = 0;
        bool first = true;
        for (size_t k = 0; k < l.size(); ++k) {
            const SierpinskiLabel lab = l.label(k);
            CHECK(in_l_sequence(lab));
            const uint64_t idx = label_to_index(lab);
            if (!first) CHECK(idx > prev);
            prev = idx;
            first = false;
        }
    }
    CHECK(l_sequence(4, 2).size() == 10);
    CHECK(l_sequence(3, 3).size() == 21);
}

TEST_CASE("both generated sequences are legal dominating sequences") {
    for (auto [p, n] : {std::pair{2, 3}, {3, 2}, {4, 2}, {2, 4}}) {
        const Graph g = build_sierpinski(p, n).graph;
        for (const LabelSequence& seq : {a_sequence(p, n), l_sequence(p, n)}) {
            VertexSequence s;
            for (size_t k = 0; k < seq.size(); ++k)
                s.push_back(static_cast<int>(label_to_index(seq.label(k))));
            CHECK(check_legal(g, s).legal);
            CHECK(is_dominating_sequence(g, s));
            CHECK(s.size() == grundy_formula(p, n));
        }
    }
}

TEST_CASE("label index conversions") {
    CHECK(label_to_index(parse_label("012", 3)) == 5);
    CHECK(label_to_index(parse_label("000", 3)) == 0);
    CHECK(label_to_index(parse_label("222", 3)) == 26);
    for (uint64_t k = 0; k < 27; ++k)
        CHECK(label_to_index(index_to_label(3, 3, k)) == k);
    CHECK_THROWS_AS(index_to_label(3, 2, 9), InputError);
}

TEST_CASE("label formatting") {
    CHECK(format_label(parse_label("120", 3)) == "120");
    SierpinskiLabel wide{12, {10, 11, 0}};
    CHECK(format_label(wide) == "ab0");
    CHECK(parse_label("ab0", 12) == wide);
    CHECK_THROWS_AS(parse_label("9", 3), InputError);
    CHECK_THROWS_AS(parse_label("", 3), InputError);
    SierpinskiLabel too_wide{40, {37}};
    CHECK_THROWS_AS(format_label(too_wide), InputError);
}

TEST_CASE("small graphs are the expected shapes") {
    CHECK(build_sierpinski(1, 4).graph == make_edgeless(1));
    for (int p = 2; p <= 5; ++p) CHECK(build_sierpinski(p, 1).graph == make_complete(p));
    for (int n = 1; n <= 6; ++n)
        CHECK(build_sierpinski(2, n).graph == make_path(1 << n));
}

TEST_CASE("S_3^2 has the frozen edge list") {
    const Graph g = build_sierpinski(3, 2).graph;
    const std::vector<std::pair<int, int>> expected{
        {0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 6}, {3, 4},
        {3, 5}, {4, 5}, {5, 7}, {6, 7}, {6, 8}, {7, 8}};
    CHECK(g.edges() == expected);
}

TEST_CASE("graph recursion contains shifted copies") {
    const SierpinskiGraph big = build_sierpinski(3, 3);
    const Graph small = build_sierpinski(3, 2).graph;
    for (int i = 0; i < 3; ++i)
        for (auto [u, v] : small.edges()) CHECK(big.graph.has_edge(9 * i + u, 9 * i + v));
    // linking edges between copies i < j: (i j^(n-1), j i^(n-1))
    CHECK(big.graph.has_edge(label_to_index(parse_label("011", 3)),
                             label_to_index(parse_label("100", 3))));
    CHECK(big.graph.has_edge(label_to_index(parse_label("022", 3)),
                             label_to_index(parse_label("200", 3))));
    CHECK(big.graph.has_edge(label_to_index(parse_label("122", 3)),
                             label_to_index(parse_label("211", 3))));
    CHECK(big.graph.edge_count() == 3 * small.edge_count() + 3);
}

TEST_CASE("adjacency predicate matches the built graph") {
    for (auto [p, n] : {std::pair{3, 2}, {3, 3}, {4, 2}, {2, 4}, {5, 2}}) {
        const Graph g = build_sierpinski(p, n).graph;
        const int nv = g.vertex_count();
        for (int u = 0; u < nv; ++u) {
            const SierpinskiLabel lu = index_to_label(p, n, u);
            for (int v = u + 1; v < nv; ++v) {
                const SierpinskiLabel lv = index_to_label(p, n, v);
                CHECK(g.has_edge(u, v) == sierpinski_adjacent(lu, lv));
            }
        }
    }
}

TEST_CASE("extreme vertices have degree p-1, the rest degree p") {
    for (auto [p, n] : {std::pair{3, 3}, {4, 2}}) {
        const Graph g = build_sierpinski(p, n).graph;
        std::set<int> extremes;
        for (int d = 0; d < p; ++d) {
            SierpinskiLabel lab{p, std::vector<uint8_t>(n, static_cast<uint8_t>(d))};
            extremes.insert(static_cast<int>(label_to_index(lab)));
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(g.degree(v) == (extremes.count(v) ? p - 1 : p));
    }
}

TEST_CASE("solver confirms the closed form at desk scale") {
    for (auto [p, n] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {4, 2}}) {
        const SolveResult r = grundy_domination_number(build_sierpinski(p, n).graph);
        CHECK(r.gamma_gr == static_cast<int>(grundy_formula(p, n)));
    }
}

TEST_CASE("resource guards") {
    CHECK_THROWS_AS(build_sierpinski(2, 25), InputError);
    CHECK_THROWS_AS(build_sierpinski(0, 1), InputError);
    CHECK_THROWS_AS(build_sierpinski(3, 0), InputError);
    CHECK_THROWS_AS(a_sequence(300, 2), InputError);
    CHECK_THROWS_AS(l_sequence(3, 0), InputError);
    CHECK_THROWS_AS(a_sequence(3, 45), InputError);
}

TEST_CASE("sierpinski adjacency rejects mismatched labels") {
    CHECK_THROWS_AS(sierpinski_adjacent(parse_label("01", 3), parse_label("0", 3)),
                    InputError);
    CHECK_THROWS_AS(sierpinski_adjacent(parse_label("01", 3), parse_label("01", 4)),
                    InputError);
}
