#pragma once

#include <string>

#include <json.hpp>

#include "grundy/acceptance.hpp"
#include "grundy/errors.hpp"
#include "grundy/interval.hpp"
#include "grundy/removal.hpp"
#include "grundy/sequence.hpp"
#include "grundy/solver.hpp"

/// JSON (de)serialization for every report structure the CLI can emit.
/// Serialization round-trips exactly: from_json(to_json(x)) == x.
namespace grundy {

inline constexpr const char* kJsonSchema = "grundy/1";

inline void to_json(nlohmann::json& j, const SolveStatus& s) {
    j = s == SolveStatus::Exact ? "exact" : "budget-exceeded";
}

inline void from_json(const nlohmann::json& j, SolveStatus& s) {
    const std::string text = j.get<std::string>();
    if (text == "exact") s = SolveStatus::Exact;
    else if (text == "budget-exceeded") s = SolveStatus::BudgetExceeded;
    else throw InputError("unknown solve status '" + text + "'");
}

inline void to_json(nlohmann::json& j, const VertexSet& s) {
    j = {{"universe", s.universe_size()}, {"members", s.to_vector()}};
}

inline void from_json(const nlohmann::json& j, VertexSet& s) {
    s = VertexSet(j.at("universe").get<int>());
    for (int v : j.at("members").get<std::vector<int>>()) s.set(v);
}

inline void to_json(nlohmann::json& j, const LegalityReport& r) {
    j = {{"legal", r.legal},
         {"first_illegal", r.first_illegal},
         {"step_footprints", r.step_footprints}};
}

inline void from_json(const nlohmann::json& j, LegalityReport& r) {
    j.at("legal").get_to(r.legal);
    j.at("first_illegal").get_to(r.first_illegal);
    j.at("step_footprints").get_to(r.step_footprints);
}

inline void to_json(nlohmann::json& j, const SolveStats& s) {
    j = {{"explored_states", s.explored_states},
         {"memo_hits", s.memo_hits},
         {"memo_entries", s.memo_entries},
         {"elapsed_seconds", s.elapsed_seconds}};
}

inline void from_json(const nlohmann::json& j, SolveStats& s) {
    j.at("explored_states").get_to(s.explored_states);
    j.at("memo_hits").get_to(s.memo_hits);
    j.at("memo_entries").get_to(s.memo_entries);
    j.at("elapsed_seconds").get_to(s.elapsed_seconds);
}

inline void to_json(nlohmann::json& j, const SolveResult& r) {
    j = {{"status", r.status},
         {"gamma_gr", r.gamma_gr},
         {"witness", r.witness},
         {"stats", r.stats}};
}

inline void from_json(const nlohmann::json& j, SolveResult& r) {
    j.at("status").get_to(r.status);
    j.at("gamma_gr").get_to(r.gamma_gr);
    j.at("witness").get_to(r.witness);
    j.at("stats").get_to(r.stats);
}

inline void to_json(nlohmann::json& j, const Coord& c) { j = format_coord(c); }

inline void from_json(const nlohmann::json& j, Coord& c) {
    c = parse_coord(j.get<std::string>());
}

inline void to_json(nlohmann::json& j, const EventKind& k) {
    j = k == EventKind::Left ? "left" : "right";
}

inline void from_json(const nlohmann::json& j, EventKind& k) {
    const std::string text = j.get<std::string>();
    if (text == "left") k = EventKind::Left;
    else if (text == "right") k = EventKind::Right;
    else throw InputError("unknown event kind '" + text + "'");
}

inline void to_json(nlohmann::json& j, const Event& e) {
    j = {{"kind", e.kind}, {"vertex", e.vertex}, {"coord", e.coord}};
}

inline void from_json(const nlohmann::json& j, Event& e) {
    j.at("kind").get_to(e.kind);
    j.at("vertex").get_to(e.vertex);
    j.at("coord").get_to(e.coord);
}

inline void to_json(nlohmann::json& j, const EdgeRecord& r) {
    j = {{"u", r.u},
         {"v", r.v},
         {"role", r.role},
         {"gamma_after", r.gamma_after},
         {"delta", r.delta},
         {"status", r.status}};
}

inline void from_json(const nlohmann::json& j, EdgeRecord& r) {
    j.at("u").get_to(r.u);
    j.at("v").get_to(r.v);
    j.at("role").get_to(r.role);
    j.at("gamma_after").get_to(r.gamma_after);
    j.at("delta").get_to(r.delta);
    j.at("status").get_to(r.status);
}

inline void to_json(nlohmann::json& j, const EdgeRemovalProfile& p) {
    j = {{"gamma_before", p.gamma_before},
         {"base_status", p.base_status},
         {"records", p.records}};
}

inline void from_json(const nlohmann::json& j, EdgeRemovalProfile& p) {
    j.at("gamma_before").get_to(p.gamma_before);
    j.at("base_status").get_to(p.base_status);
    j.at("records").get_to(p.records);
}

inline void to_json(nlohmann::json& j, const VertexRecord& r) {
    j = {{"vertex", r.vertex},
         {"role", r.role},
         {"gamma_after", r.gamma_after},
         {"delta", r.delta},
         {"status", r.status}};
}

inline void from_json(const nlohmann::json& j, VertexRecord& r) {
    j.at("vertex").get_to(r.vertex);
    j.at("role").get_to(r.role);
    j.at("gamma_after").get_to(r.gamma_after);
    j.at("delta").get_to(r.delta);
    j.at("status").get_to(r.status);
}

inline void to_json(nlohmann::json& j, const VertexRemovalProfile& p) {
    j = {{"gamma_before", p.gamma_before},
         {"base_status", p.base_status},
         {"records", p.records}};
}

inline void from_json(const nlohmann::json& j, VertexRemovalProfile& p) {
    j.at("gamma_before").get_to(p.gamma_before);
    j.at("base_status").get_to(p.base_status);
    j.at("records").get_to(p.records);
}

inline void to_json(nlohmann::json& j, const KEdgeBoundReport& r) {
    j = {{"k", r.k},
         {"gamma_before", r.gamma_before},
         {"gamma_after", r.gamma_after},
         {"delta", r.delta},
         {"base_status", r.base_status},
         {"extended_status", r.extended_status}};
}

inline void from_json(const nlohmann::json& j, KEdgeBoundReport& r) {
    j.at("k").get_to(r.k);
    j.at("gamma_before").get_to(r.gamma_before);
    j.at("gamma_after").get_to(r.gamma_after);
    j.at("delta").get_to(r.delta);
    j.at("base_status").get_to(r.base_status);
    j.at("extended_status").get_to(r.extended_status);
}

inline void to_json(nlohmann::json& j, const SimplicialTwinRecord& r) {
    j = {{"vertex", r.vertex},
         {"simplicial", r.simplicial},
         {"twin", r.twin},
         {"twin_partner", r.twin_partner},
         {"gamma_after", r.gamma_after},
         {"delta", r.delta},
         {"status", r.status}};
}

inline void from_json(const nlohmann::json& j, SimplicialTwinRecord& r) {
    j.at("vertex").get_to(r.vertex);
    j.at("simplicial").get_to(r.simplicial);
    j.at("twin").get_to(r.twin);
    j.at("twin_partner").get_to(r.twin_partner);
    j.at("gamma_after").get_to(r.gamma_after);
    j.at("delta").get_to(r.delta);
    j.at("status").get_to(r.status);
}

inline void to_json(nlohmann::json& j, const SimplicialTwinReport& r) {
    j = {{"gamma_before", r.gamma_before},
         {"base_status", r.base_status},
         {"records", r.records}};
}

inline void from_json(const nlohmann::json& j, SimplicialTwinReport& r) {
    j.at("gamma_before").get_to(r.gamma_before);
    j.at("base_status").get_to(r.base_status);
    j.at("records").get_to(r.records);
}

inline void to_json(nlohmann::json& j, const CriterionResult& c) {
    j = {{"id", c.id},
         {"name", c.name},
         {"passed", c.passed},
         {"detail", c.detail},
         {"seconds", c.seconds}};
}

inline void from_json(const nlohmann::json& j, CriterionResult& c) {
    j.at("id").get_to(c.id);
    j.at("name").get_to(c.name);
    j.at("passed").get_to(c.passed);
    j.at("detail").get_to(c.detail);
    j.at("seconds").get_to(c.seconds);
}

inline void to_json(nlohmann::json& j, const AcceptanceReport& r) {
    j = {{"seed", r.seed}, {"criteria", r.criteria}, {"all_passed", r.all_passed()}};
}

inline void from_json(const nlohmann::json& j, AcceptanceReport& r) {
    j.at("seed").get_to(r.seed);
    j.at("criteria").get_to(r.criteria);
}

}  // namespace grundy
