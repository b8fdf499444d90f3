#pragma once

#include <json.hpp>

#include "verify.hpp"

namespace topolab {

// JSON form of reports. Subsets are written as point lists; spaces as
// {label, n, opens} or {label, skel}.

using json = nlohmann::json;

inline json points_json(Mask m) { return json(points_of(m)); }
inline Mask points_from(const json& j) { return mask_of(j.get<std::vector<int>>()); }

inline void to_json(json& j, const SpaceRecord& r) {
  j = json{{"label", r.label}};
  if (r.is_skeleton()) {
    j["skel"] = r.skel;
    return;
  }
  j["n"] = r.n;
  j["opens"] = json::array();
  for (Mask u : r.opens) j["opens"].push_back(points_json(u));
}

inline void from_json(const json& j, SpaceRecord& r) {
  r = {};
  r.label = j.at("label").get<std::string>();
  if (j.contains("skel")) {
    r.skel = j.at("skel").get<std::string>();
    return;
  }
  r.n = j.at("n").get<int>();
  for (const auto& u : j.at("opens")) r.opens.push_back(points_from(u));
}

inline void to_json(json& j, const Violation& v) {
  j = json{{"space", v.space}, {"detail", v.detail}};
  j["subsets"] = json::array();
  for (Mask a : v.subsets) j["subsets"].push_back(points_json(a));
  if (!v.symbolic.empty()) j["symbolic_subsets"] = v.symbolic;
  j["maps"] = json::array();
  if (v.codomain) j["maps"].push_back(json{{"codomain", *v.codomain}, {"table", v.table}});
  if (v.factor) j["factor"] = *v.factor;
}

inline void from_json(const json& j, Violation& v) {
  v = {};
  v.space = j.at("space").get<SpaceRecord>();
  v.detail = j.at("detail").get<std::string>();
  for (const auto& a : j.at("subsets")) v.subsets.push_back(points_from(a));
  if (j.contains("symbolic_subsets")) v.symbolic = j.at("symbolic_subsets").get<std::vector<std::string>>();
  if (!j.at("maps").empty()) {
    v.codomain = j.at("maps")[0].at("codomain").get<SpaceRecord>();
    v.table = j.at("maps")[0].at("table").get<std::vector<int>>();
  }
  if (j.contains("factor")) v.factor = j.at("factor").get<SpaceRecord>();
}

inline void to_json(json& j, const UniverseSpec& u) {
  j = json{{"kind", std::string(name_of(u.kind))}, {"n", u.n}, {"n_min", u.n_min}, {"seed", u.seed}, {"count", u.count}};
}

inline void from_json(const json& j, UniverseSpec& u) {
  const auto kind = j.at("kind").get<std::string>();
  bool known = false;
  for (auto k : {UniverseKind::Exhaustive, UniverseKind::Sampled, UniverseKind::Catalog, UniverseKind::Explicit})
    if (name_of(k) == kind) {
      u.kind = k;
      known = true;
    }
  if (!known) throw InvalidArgument("unknown universe kind '" + kind + "'");
  u.n = j.at("n").get<int>();
  u.n_min = j.at("n_min").get<int>();
  u.seed = j.at("seed").get<std::uint64_t>();
  u.count = j.at("count").get<std::size_t>();
}

inline void to_json(json& j, const Report& r) {
  j = json{{"claim", r.claim},
           {"universe", r.universe.size() == 1 ? json(r.universe[0]) : json(r.universe)},
           {"checked", r.checked},
           {"engaged", r.engaged},
           {"violations", r.violations},
           {"violation_count", r.violation_count},
           {"unknowns", r.unknowns},
           {"skipped", r.skipped},
           {"sampled", r.sampled},
           {"samples", r.samples},
           {"status", r.status},
           {"notes", r.notes},
           {"ms", r.ms}};
  if (r.empirical) {
    j["empirical"] = true;
    j["direction"] = r.direction;
    j["converse_count"] = r.converse_count;
    j["converse_violations"] = r.converse_violations;
  }
}

inline void from_json(const json& j, Report& r) {
  r = {};
  r.claim = j.at("claim").get<std::string>();
  const auto& u = j.at("universe");
  if (u.is_array())
    r.universe = u.get<std::vector<UniverseSpec>>();
  else
    r.universe = {u.get<UniverseSpec>()};
  r.checked = j.at("checked").get<std::size_t>();
  r.engaged = j.at("engaged").get<std::size_t>();
  r.violations = j.at("violations").get<std::vector<Violation>>();
  r.violation_count = j.at("violation_count").get<std::size_t>();
  r.unknowns = j.at("unknowns").get<std::size_t>();
  r.skipped = j.at("skipped").get<std::size_t>();
  r.sampled = j.at("sampled").get<bool>();
  r.samples = j.at("samples").get<std::size_t>();
  r.status = j.at("status").get<std::string>();
  r.notes = j.at("notes").get<std::string>();
  r.ms = j.at("ms").get<std::int64_t>();
  if (j.value("empirical", false)) {
    r.empirical = true;
    r.direction = j.at("direction").get<std::string>();
    r.converse_count = j.at("converse_count").get<std::size_t>();
    r.converse_violations = j.at("converse_violations").get<std::vector<Violation>>();
  }
}

inline void to_json(json& j, const HuntResult& h) {
  j = json{{"target", h.target}, {"checked", h.checked}, {"unknowns", h.unknowns}, {"coverage", h.coverage}};
  j["witness"] = h.witness ? json(*h.witness) : json(nullptr);
  if (h.space) j["space"] = *h.space;
}

}  // namespace topolab
