#pragma once

#include <fstream>

#include <json.hpp>

#include "tern/audit.hpp"

// JSON file formats: systems, matrices, registry listing, verdicts and
// reports. These are the machine contracts behind the CLI's --json mode;
// byte-identical output for identical input.

namespace tern {

using nlohmann::json;
using nlohmann::ordered_json;

// {"name": ..., "functions": [{"name"?: ..., "table": base-3 literal}]}
inline system system_from_json(const json& j) {
  if (!j.is_object() || !j.contains("functions") || !j["functions"].is_array())
    throw error(errc::bad_input, "system file needs a \"functions\" array");
  std::string name = j.value("name", "system");
  std::vector<func> fns;
  for (const auto& e : j["functions"]) {
    if (!e.is_object() || !e.contains("table") || !e["table"].is_string())
      throw error(errc::bad_input, "each function needs a \"table\" literal");
    fns.push_back(func::parse(e["table"].get<std::string>()));
  }
  return system(std::move(name), std::move(fns));
}

inline system load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::bad_input, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw error(errc::bad_input, "bad JSON in " + path + ": " + e.what());
  }
  return system_from_json(j);
}

inline ordered_json matrix_to_json(const matrix& m) {
  ordered_json j;
  j["rows"] = m.rows;
  auto cols = ordered_json::array();
  for (const auto& c : m.cols) {
    auto col = ordered_json::array();
    for (val v : c) col.push_back(int(v));
    cols.push_back(std::move(col));
  }
  j["columns"] = std::move(cols);
  return j;
}

inline matrix matrix_from_json(const json& j) {
  if (!j.contains("rows") || !j.contains("columns"))
    throw error(errc::bad_input, "matrix needs \"rows\" and \"columns\"");
  std::vector<std::vector<val>> cols;
  for (const auto& c : j["columns"]) {
    std::vector<val> col;
    for (const auto& v : c) col.push_back(static_cast<val>(v.get<int>()));
    cols.push_back(std::move(col));
  }
  return matrix(j["rows"].get<int>(), std::move(cols));
}

inline ordered_json tuple_to_json(std::span<const val> t) {
  auto a = ordered_json::array();
  for (val v : t) a.push_back(int(v));
  return a;
}

inline ordered_json witness_to_json(const witness& w) {
  return std::visit(
      [](const auto& x) -> ordered_json {
        using W = std::decay_t<decltype(x)>;
        ordered_json j;
        if constexpr (std::is_same_v<W, pol_witness>) {
          j["kind"] = "matrix";
          j["matrix_index"] = x.matrix_idx;
          j["columns"] = x.cols;
          j["result"] = tuple_to_json(x.result);
        } else if constexpr (std::is_same_v<W, pair_witness>) {
          j["kind"] = "set";
          j["pair"] = {int(x.pair.lo), int(x.pair.hi)};
          j["at"] = tuple_to_json(x.at);
          j["value"] = int(x.out);
        } else if constexpr (std::is_same_v<W, bool_class_witness>) {
          j["kind"] = x.whole_pair ? "pair_restriction" : "block_restriction";
          if (!x.whole_pair) j["block_free_positions"] = x.block_free_positions;
          j["restriction"] = x.restriction.str();
          j["class"] = std::string(post_name(x.post));
        } else if constexpr (std::is_same_v<W, part_witness>) {
          j["kind"] = "partition";
          j["partition"] = x.part.str();
          j["tuple1"] = tuple_to_json(x.t1);
          j["tuple2"] = tuple_to_json(x.t2);
          j["values"] = {int(x.v1), int(x.v2)};
        } else if constexpr (std::is_same_v<W, linear_witness>) {
          j["kind"] = "linear";
          j["at"] = tuple_to_json(x.at);
          j["expected"] = int(x.expected);
          j["got"] = int(x.got);
        } else {
          j["kind"] = "square";
          j["coords"] = {x.i, x.j};
          auto ts = ordered_json::array();
          for (const auto& t : x.tuples) ts.push_back(tuple_to_json(t));
          j["tuples"] = std::move(ts);
          j["values"] = {int(x.values[0]), int(x.values[1]), int(x.values[2]),
                         int(x.values[3])};
          j["selected"] = x.selected;
        }
        return j;
      },
      w);
}

inline ordered_json verdict_to_json(const completeness_verdict& v,
                                    const std::string& system_name) {
  ordered_json j;
  j["system"] = system_name;
  j["mode"] = v.weak ? "weak" : "full";
  j["status"] = v.status == verdict_status::complete ? "complete" : "incomplete";
  if (v.status == verdict_status::complete) {
    auto ws = ordered_json::array();
    for (const auto& [c, cert] : v.witnesses) {
      ordered_json e;
      e["class"] = info(c).name;
      e["function"] = cert.fn.str();
      e["violation"] = witness_to_json(cert.why);
      ws.push_back(std::move(e));
    }
    j["witnesses"] = std::move(ws);
  } else {
    auto cs = ordered_json::array();
    for (cls c : v.containing) cs.push_back(info(c).name);
    j["containing_classes"] = std::move(cs);
  }
  return j;
}

inline ordered_json registry_to_json() {
  auto arr = ordered_json::array();
  for (const auto& ci : registry()) {
    ordered_json e;
    e["name"] = ci.name;
    e["kind"] = std::visit(
        [](const auto& k) -> std::string {
          using T = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<T, pol_meet_kind>) return "pol";
          else if constexpr (std::is_same_v<T, sigma_pair_kind>) return "sigma_pair";
          else if constexpr (std::is_same_v<T, sigma_partition_kind>)
            return "sigma_partition";
          else if constexpr (std::is_same_v<T, linear_kind>) return "linear";
          else return "quasilinear";
        },
        ci.kind);
    e["relation"] = ci.relation;
    e["contains_all_constants"] = ci.all_constants;
    e["orbit_base"] = info(ci.orbit_base).name;
    e["from_base"] = ci.from_base.str();
    if (const auto* k = std::get_if<pol_meet_kind>(&ci.kind)) {
      auto ms = ordered_json::array();
      for (const matrix& m : k->mats) ms.push_back(matrix_to_json(m));
      e["matrices"] = std::move(ms);
    }
    arr.push_back(std::move(e));
  }
  ordered_json j;
  j["classes"] = std::move(arr);
  j["count"] = registry().size();
  return j;
}

inline ordered_json reports_to_json(std::span<const oracle_report> rs) {
  auto arr = ordered_json::array();
  for (const auto& r : rs) {
    ordered_json e;
    e["claim"] = r.claim;
    e["status"] = r.status == report_status::verified
                      ? "verified"
                      : (r.status == report_status::refuted ? "refuted" : "inapplicable");
    if (!r.evidence.empty()) e["evidence"] = r.evidence;
    arr.push_back(std::move(e));
  }
  ordered_json j;
  j["reports"] = std::move(arr);
  return j;
}

}  // namespace tern
