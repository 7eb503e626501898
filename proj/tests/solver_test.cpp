#include <doctest.h>

#include <vector>

#include "grundy/errors.hpp"
#include "grundy/families.hpp"
#include "grundy/sequence.hpp"
#include "grundy/sierpinski.hpp"
#include "grundy/solver.hpp"

using namespace grundy;

namespace {

std::vector<Graph> small_corpus() {
    std::vector<Graph> corpus;
    for (int m = 1; m <= 9; ++m) corpus.push_back(make_path(m));
    for (int n = 3; n <= 9; ++n) corpus.push_back(make_cycle(n));
    for (int n = 1; n <= 8; ++n) corpus.push_back(make_complete(n));
    for (int n = 1; n <= 6; ++n) corpus.push_back(make_edgeless(n));
    corpus.push_back(make_h_family(3, 3).graph);
    corpus.push_back(make_g_family(4, 3).graph);
    corpus.push_back(build_sierpinski(3, 2).graph);
    for (uint64_t seed = 0; seed < 10; ++seed)
        corpus.push_back(random_graph(4 + static_cast<int>(seed % 6), 0.4, seed));
    return corpus;
}

void check_result_shape(const Graph& g, const SolveResult& r) {
    CHECK(r.gamma_gr == static_cast<int>(r.witness.size()));
    CHECK(check_legal(g, r.witness).legal);
    if (g.vertex_count() > 0) CHECK(is_dominating_sequence(g, r.witness));
}

}  // namespace

TEST_CASE("frozen values on basic families") {
    CHECK(grundy_domination_number(make_path(4)).gamma_gr == 3);
    CHECK(grundy_domination_number(make_cycle(4)).gamma_gr == 2);
    CHECK(grundy_domination_number(make_edgeless(5)).gamma_gr == 5);
    for (int p = 1; p <= 6; ++p)
        CHECK(grundy_domination_number(make_complete(p)).gamma_gr == 1);

    // Paths admit the right-to-left chain (m-1, ..., 1), and no sequence
    // reaches m because the first move always footprints two vertices.
    for (int m = 2; m <= 10; ++m)
        CHECK(grundy_domination_number(make_path(m)).gamma_gr == m - 1);
}

TEST_CASE("frozen values on the extremal families") {
    CHECK(grundy_domination_number(make_h_family(3, 3).graph).gamma_gr == 3);
    CHECK(grundy_domination_number(make_h_family(5, 4).graph).gamma_gr == 6);
    CHECK(grundy_domination_number(make_g_family(4, 3).graph).gamma_gr == 4);
    CHECK(grundy_domination_number(make_g_family(5, 3).graph).gamma_gr == 5);
    CHECK(grundy_domination_number(build_sierpinski(3, 2).graph).gamma_gr == 6);
}

TEST_CASE("canonical witnesses") {
    CHECK(grundy_domination_number(make_path(4)).witness == VertexSequence{0, 1, 2});
    CHECK(grundy_domination_number(make_cycle(4)).witness == VertexSequence{0, 1});
    CHECK(grundy_domination_number(make_complete(3)).witness == VertexSequence{0});
    CHECK(grundy_domination_number(make_edgeless(3)).witness ==
          VertexSequence{0, 1, 2});
}

TEST_CASE("empty graph") {
    const SolveResult r = grundy_domination_number(make_edgeless(0));
    CHECK(r.status == SolveStatus::Exact);
    CHECK(r.gamma_gr == 0);
    CHECK(r.witness.empty());
}

TEST_CASE("witness is always legal, dominating, and gamma long") {
    for (const Graph& g : small_corpus())
        check_result_shape(g, grundy_domination_number(g));
}

TEST_CASE("brute force agrees with the memoized solver") {
    for (const Graph& g : small_corpus()) {
        if (g.vertex_count() > 10) continue;
        const SolveResult fast = grundy_domination_number(g);
        const SolveResult slow = grundy_brute_force(g);
        CHECK(fast.gamma_gr == slow.gamma_gr);
        CHECK(fast.witness == slow.witness);
        CHECK(slow.status == SolveStatus::Exact);
    }
}

TEST_CASE("all solver modes produce identical results") {
    for (const Graph& g : small_corpus()) {
        const SolveResult base = grundy_domination_number(g);

        SolverOptions no_memo;
        no_memo.use_memo = false;
        const SolveResult plain = grundy_domination_number(g, no_memo);
        CHECK(plain.gamma_gr == base.gamma_gr);
        CHECK(plain.witness == base.witness);

        SolverOptions par;
        par.parallel = true;
        const SolveResult parallel = grundy_domination_number(g, par);
        CHECK(parallel.gamma_gr == base.gamma_gr);
        CHECK(parallel.witness == base.witness);

        SolverOptions heur;
        heur.degree_heuristic = true;
        const SolveResult ordered = grundy_domination_number(g, heur);
        CHECK(ordered.gamma_gr == base.gamma_gr);
        CHECK(ordered.witness == base.witness);
    }
}

TEST_CASE("bounds hold on random graphs") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_graph(8, 0.3, seed);
        const int gamma = grundy_domination_number(g).gamma_gr;
        CHECK(gamma >= 1);
        CHECK(gamma <= 8);
    }
}

TEST_CASE("budget abort yields a usable lower bound") {
    const Graph g = make_path(12);
    SolverOptions opts;
    opts.budget = 5;
    const SolveResult r = grundy_domination_number(g, opts);
    CHECK(r.status == SolveStatus::BudgetExceeded);
    check_result_shape(g, r);
    CHECK(r.gamma_gr <= 11);

    // Budget zero aborts before any state is memoized; the fallback
    // witness is the greedy extension, still legal and dominating.
    opts.budget = 0;
    const SolveResult z = grundy_domination_number(g, opts);
    CHECK(z.status == SolveStatus::BudgetExceeded);
    check_result_shape(g, z);

    opts.budget = 1u << 20;
    const SolveResult full = grundy_domination_number(g, opts);
    CHECK(full.status == SolveStatus::Exact);
    CHECK(full.gamma_gr == 11);
}

TEST_CASE("budget abort in no-memo and parallel modes") {
    const Graph g = make_cycle(11);
    const int exact = grundy_domination_number(g).gamma_gr;

    // The first descent alone expands more nodes than this, so the abort
    // fires during the main search, not during witness reconstruction.
    SolverOptions opts;
    opts.use_memo = false;
    opts.budget = 2;
    const SolveResult plain = grundy_domination_number(g, opts);
    CHECK(plain.status == SolveStatus::BudgetExceeded);
    check_result_shape(g, plain);
    CHECK(plain.gamma_gr <= exact);

    SolverOptions par;
    par.parallel = true;
    par.budget = 5;
    const SolveResult parallel = grundy_domination_number(g, par);
    CHECK(parallel.status == SolveStatus::BudgetExceeded);
    check_result_shape(g, parallel);
    CHECK(parallel.gamma_gr <= exact);
}

TEST_CASE("vertex limits are enforced") {
    CHECK_THROWS_AS(grundy_domination_number(make_edgeless(25)), InputError);

    SolverOptions opts;
    opts.max_vertices = 57;
    CHECK_THROWS_AS(grundy_domination_number(make_path(3), opts), InputError);

    opts.max_vertices = -1;
    CHECK_THROWS_AS(grundy_domination_number(make_path(3), opts), InputError);

    opts.max_vertices = 26;
    CHECK(grundy_domination_number(make_complete(26), opts).gamma_gr == 1);

    CHECK_THROWS_AS(grundy_brute_force(make_edgeless(13)), InputError);
}

TEST_CASE("solver stats are plausible") {
    const SolveResult r = grundy_domination_number(make_cycle(8));
    CHECK(r.status == SolveStatus::Exact);
    CHECK(r.stats.explored_states > 0);
    CHECK(r.stats.memo_entries > 0);
    CHECK(r.stats.elapsed_seconds >= 0.0);

    SolverOptions no_memo;
    no_memo.use_memo = false;
    const SolveResult plain = grundy_domination_number(make_cycle(8), no_memo);
    CHECK(plain.stats.memo_entries == 0);
    CHECK(plain.stats.memo_hits == 0);
    CHECK(plain.stats.explored_states >= r.stats.explored_states);
}

TEST_CASE("vertex deletion never increases gamma by more than two") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        const Graph g = random_graph(8, 0.35, seed);
        const int gamma = grundy_domination_number(g).gamma_gr;
        for (int v = 0; v < g.vertex_count(); ++v) {
            const int after =
                grundy_domination_number(remove_vertex(g, v).graph).gamma_gr;
            CHECK(after <= gamma);
            CHECK(after >= gamma - 2);
        }
    }
}
