#pragma once

// JSON reports, schema 1: {schema, command, config, inputs, verdicts,
// witnesses, exhaustion, timings}. Keys keep insertion order so identical
// runs serialize byte for byte.

#include <optional>
#include <string>

#include "json.hpp"
#include "schottky/classify.hpp"
#include "schottky/coding.hpp"
#include "schottky/concentration.hpp"
#include "schottky/config.hpp"
#include "schottky/pipeline.hpp"

namespace schottky {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

inline Json to_json(const BoundaryPoint<double>& p) { return Json{{"angle", p.angle()}}; }

inline Json to_json(const Arc<double>& arc) {
  return Json{{"start", arc.start().angle()}, {"end", arc.end().angle()}, {"length", arc.length()}};
}

inline Json to_json(const Geodesic<double>& g) { return Json{{"start", g.start().angle()}, {"end", g.end().angle()}}; }

inline Json to_json(const WitnessReport& r) {
  Json out;
  out["outcome"] = to_string(r.outcome);
  out["word"] = r.word ? Json(r.word->to_string()) : Json(nullptr);
  out["length"] = r.word ? Json(r.word->size()) : Json(nullptr);
  out["max_len"] = r.max_len;
  out["words_examined"] = r.words_examined;
  Json checks = Json::array();
  for (const Check& c : r.verification) checks.push_back(Json{{"check", c.name}, {"passed", c.passed}});
  out["verification"] = checks;
  if (r.direction) out["direction"] = to_string(*r.direction);
  if (r.recurrence_index) out["recurrence_index"] = *r.recurrence_index;
  return out;
}

inline Json to_json(const RecurrenceVerdict& v) {
  return Json{{"block_start", v.block_start()},
              {"window", v.window()},
              {"depth", v.depth()},
              {"outcome", v.recurs() ? "recurs" : "no-recurrence-found"},
              {"positions", v.positions()}};
}

inline Json to_json(const NonRecurrenceCertificate& c) {
  return Json{{"family", c.family},
              {"block", c.block.to_string()},
              {"block_start", c.block_start},
              {"window", c.window},
              {"reason", c.reason}};
}

inline Json to_json(const ConicalProbe& probe) {
  double max = 0;
  for (double d : probe.distances) max = std::max(max, d);
  return Json{{"evidence", to_string(probe.evidence)},
              {"depth", probe.distances.size()},
              {"threshold", probe.threshold},
              {"last_quartile_minimum", probe.last_quartile_minimum},
              {"maximum", max},
              {"distances", probe.distances}};
}

inline Json to_json(const HierarchyReport& h) {
  Json violations = Json::array();
  for (const auto& v : h.violations)
    violations.push_back(Json{{"upstream", v.upstream}, {"downstream", v.downstream}, {"detail", v.detail}});
  return Json{{"consistent", h.consistent()}, {"checked", h.checked}, {"violations", violations}};
}

inline Json config_json(const SchottkyConfig& config) { return Json{{"radius", config.radius}}; }

/// Skeleton with every schema field present; timings stay null unless the
/// caller fills them (they would break byte-identical reruns).
inline Json make_report(const std::string& command, const SchottkyConfig& config) {
  Json out;
  out["schema"] = kReportSchema;
  out["command"] = command;
  out["config"] = config_json(config);
  out["inputs"] = Json::object();
  out["verdicts"] = Json::object();
  out["witnesses"] = Json::object();
  out["exhaustion"] = Json::object();
  out["timings"] = nullptr;
  return out;
}

inline void add_search(Json& report, const std::string& name, const WitnessReport& r) {
  report["witnesses"][name] = to_json(r);
  if (!r.found()) report["exhaustion"][name] = Json{{"max_len", r.max_len}, {"words_examined", r.words_examined}};
}

inline Json classify_report(const ClassifyResult& r, const ClassifyOptions& options, const SchottkyConfig& config) {
  Json out = make_report("classify", config);
  out["inputs"] = Json{{"seq", r.spec},
                       {"depth", options.depth},
                       {"max_len", options.max_len},
                       {"max_window", options.max_window},
                       {"chain_window", options.chain_window},
                       {"epsilon", options.epsilon}};

  Json& verdicts = out["verdicts"];
  verdicts["point"] = Json{{"angle", r.p.angle()}, {"decode_depth", r.decode_depth}};
  Json controlled;
  controlled["evidence"] = to_string(r.controlled);
  controlled["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  controlled["certificate_scan"] = r.certificate_scan ? to_json(*r.certificate_scan) : Json(nullptr);
  Json windows = Json::array();
  for (const auto& v : r.recurrence) windows.push_back(to_json(v));
  controlled["recurrence"] = windows;
  verdicts["controlled"] = controlled;

  if (r.bridge) {
    out["inputs"]["neighbourhoods"] = Json{{"bridge", Json{{"from", r.bridge_from}, {"to", r.bridge_to}}},
                                           {"lambda", to_json(r.bridge->lambda)},
                                           {"U", to_json(r.bridge->u)},
                                           {"V", to_json(*r.target)}};
  }
  verdicts["concentration"] = r.concentration ? Json(to_string(r.concentration->outcome)) : Json("unknown");
  Json separation;
  separation["outcome"] = r.separation ? Json(to_string(r.separation->outcome)) : Json("unknown");
  separation["direction"] =
      r.separation && r.separation->direction ? Json(to_string(*r.separation->direction)) : Json(nullptr);
  verdicts["separation"] = separation;
  verdicts["conical"] = r.conical ? to_json(*r.conical) : Json(nullptr);
  verdicts["hierarchy"] = to_json(r.hierarchy);

  add_search(out, "controlled_chain", r.chain);
  if (r.concentration) add_search(out, "concentration", *r.concentration);
  if (r.separation) add_search(out, "separation", *r.separation);
  return out;
}

}  // namespace schottky
