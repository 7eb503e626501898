#include <doctest.h>

#include <string>

#include <json.hpp>

#include "grundy/acceptance.hpp"
#include "grundy/errors.hpp"
#include "grundy/json_io.hpp"

using namespace grundy;
using nlohmann::json;

namespace {

// Serialize, reparse from text, deserialize; the result must compare equal.
template <typename T>
T round_trip(const T& value) {
    const json j = value;
    return json::parse(j.dump()).get<T>();
}

}  // namespace

TEST_CASE("schema tag") { CHECK(std::string(kJsonSchema) == "grundy/1"); }

TEST_CASE("solve status") {
    CHECK(round_trip(SolveStatus::Exact) == SolveStatus::Exact);
    CHECK(round_trip(SolveStatus::BudgetExceeded) == SolveStatus::BudgetExceeded);
    CHECK(json(SolveStatus::Exact).get<std::string>() == "exact");
    CHECK_THROWS_AS(json("woozy").get<SolveStatus>(), InputError);
}

TEST_CASE("vertex set") {
    VertexSet s(9);
    s.set(0);
    s.set(8);
    CHECK(round_trip(s) == s);
    CHECK(round_trip(VertexSet(0)) == VertexSet(0));
}

TEST_CASE("legality report") {
    LegalityReport r;
    r.legal = false;
    r.first_illegal = 2;
    r.step_footprints.assign(3, VertexSet(4));
    r.step_footprints[0].set(1);
    CHECK(round_trip(r) == r);
}

TEST_CASE("solve result") {
    SolveResult r;
    r.status = SolveStatus::BudgetExceeded;
    r.gamma_gr = 3;
    r.witness = {2, 0, 1};
    r.stats.explored_states = 17;
    r.stats.memo_hits = 4;
    r.stats.memo_entries = 9;
    r.stats.elapsed_seconds = 0.5;
    CHECK(round_trip(r) == r);
}

TEST_CASE("coord serializes as its canonical text") {
    const Coord c = parse_coord("-12.75");
    CHECK(json(c).get<std::string>() == "-12.75");
    CHECK(round_trip(c) == c);
}

TEST_CASE("events") {
    const Event e{EventKind::Right, 3, parse_coord("0.5")};
    CHECK(round_trip(e) == e);
    CHECK(json(EventKind::Left).get<std::string>() == "left");
    CHECK_THROWS_AS(json("sideways").get<EventKind>(), InputError);
}

TEST_CASE("removal profiles") {
    EdgeRemovalProfile ep;
    ep.gamma_before = 4;
    ep.base_status = SolveStatus::Exact;
    ep.records.push_back({0, 1, "cycle-edge", 5, 1, SolveStatus::Exact});
    ep.records.push_back({1, 2, "", 3, -1, SolveStatus::BudgetExceeded});
    CHECK(round_trip(ep) == ep);

    VertexRemovalProfile vp;
    vp.gamma_before = 2;
    vp.records.push_back({0, "leaf", 1, -1, SolveStatus::Exact});
    CHECK(round_trip(vp) == vp);
}

TEST_CASE("k-edge and simplicial twin reports") {
    const KEdgeBoundReport k{2, 3, 4, 1, SolveStatus::Exact, SolveStatus::Exact};
    CHECK(round_trip(k) == k);

    SimplicialTwinReport st;
    st.gamma_before = 1;
    st.records.push_back({0, true, true, 1, 1, 0, SolveStatus::Exact});
    CHECK(round_trip(st) == st);
}

TEST_CASE("acceptance report") {
    AcceptanceReport rep;
    rep.seed = 7;
    rep.criteria.push_back({1, "sierpinski-closed-form", true, "ok", 0.25});
    rep.criteria.push_back({2, "sierpinski-sequences", false, "broke", 0.5});
    CHECK_FALSE(rep.all_passed());
    CHECK(round_trip(rep) == rep);

    const json j = rep;
    CHECK(j.at("all_passed").get<bool>() == false);
}
