#pragma once

#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "sylprob/theorem_lab.hpp"

namespace sylprob {

// JSON is the only serialization boundary. Rationals cross it as "num/den"
// strings, never as floats; group orders as decimal strings; permutations
// as 1-based cycle strings. Key order is fixed, so identical runs produce
// byte-identical reports.
using Json = nlohmann::ordered_json;

struct RunConfig {
  std::size_t enumeration_budget = kDefaultEnumerationBudget;
  std::size_t quotient_degree_budget = kDefaultQuotientDegreeBudget;
  unsigned jobs = 0;  // 0: use the hardware concurrency
  bool include_stretch = false;

  unsigned effective_jobs() const {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
  }
};

inline Json to_json(const RunConfig& c) {
  return Json{{"enumeration_budget", c.enumeration_budget},
              {"quotient_degree_budget", c.quotient_degree_budget},
              {"jobs", c.jobs},
              {"include_stretch", c.include_stretch}};
}

inline RunConfig run_config_from_json(const Json& j) {
  RunConfig c;
  c.enumeration_budget = j.at("enumeration_budget").get<std::size_t>();
  c.quotient_degree_budget = j.at("quotient_degree_budget").get<std::size_t>();
  c.jobs = j.at("jobs").get<unsigned>();
  c.include_stretch = j.at("include_stretch").get<bool>();
  return c;
}

inline Json generators_json(const PermGroup& g) {
  Json out = Json::array();
  for (const Perm& p : g.generators()) out.push_back(p.cycle_string());
  return out;
}

inline Json to_json(const OmegaReport& om) {
  Json values = Json::array();
  for (const Rational& v : om.values) values.push_back(v.str());
  Json witnesses = Json::array();
  for (const auto& [wp, wq] : om.witnesses)
    witnesses.push_back(Json{{"p_subgroup", generators_json(wp)},
                             {"q_subgroup", generators_json(wq)}});
  return Json{{"p", om.p},
              {"q", om.q},
              {"values", values},
              {"witnesses", witnesses},
              {"conjugates_swept", om.conjugates_swept}};
}

inline Json to_json(const PrStarReport& rep) {
  Json pairs = Json::array();
  for (const auto& pm : rep.per_pair)
    pairs.push_back(Json{{"p", pm.p},
                         {"q", pm.q},
                         {"max", pm.max.str()},
                         {"witness_p", generators_json(pm.witness_p)},
                         {"witness_q", generators_json(pm.witness_q)},
                         {"conjugates_swept", pm.conjugates_swept}});
  return Json{{"pi1", rep.pi1.str()},
              {"pi2", rep.pi2.str()},
              {"value", rep.value.str()},
              {"per_pair", pairs}};
}

inline Json to_json(const Verdict& v) {
  Json j{{"group", v.group_label},
         {"implication", v.implication_id},
         {"hypothesis_value", v.hypothesis_value.str()},
         {"threshold", v.threshold.str()},
         {"hypothesis_holds", v.hypothesis_holds},
         {"conclusion_holds", v.conclusion_holds},
         {"status", to_string(v.status)}};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.group_label = j.at("group").get<std::string>();
  v.implication_id = j.at("implication").get<std::string>();
  v.hypothesis_value = Rational::parse(j.at("hypothesis_value").get<std::string>());
  v.threshold = Rational::parse(j.at("threshold").get<std::string>());
  v.hypothesis_holds = j.at("hypothesis_holds").get<bool>();
  v.conclusion_holds = j.at("conclusion_holds").get<bool>();
  std::string s = j.at("status").get<std::string>();
  v.status = s == "Confirmed"        ? Verdict::Status::Confirmed
             : s == "COUNTEREXAMPLE" ? Verdict::Status::Counterexample
                                     : Verdict::Status::Vacuous;
  if (j.contains("note")) v.note = j.at("note").get<std::string>();
  return v;
}

inline Json to_json(const SharpnessRecord& r) {
  return Json{{"claim", r.claim},
              {"expected", r.expected.str()},
              {"actual", r.actual.str()},
              {"structural_fact_holds", r.extra_ok},
              {"ok", r.ok}};
}

inline Json to_json(const Example44Report& r) {
  Json halls = Json::array();
  for (const auto& hp : r.hall_pairs)
    halls.push_back(Json{{"p", hp.p},
                         {"hall_order", hp.hall_order.str()},
                         {"best_value", hp.best_value.str()},
                         {"lower_bound_only", hp.lower_bound_only}});
  return Json{{"s", r.s},
              {"order", r.group_order.str()},
              {"fitting_index", r.fitting_index.str()},
              {"fitting_index_correct", r.fitting_index_correct},
              {"sylow_pair_min", r.sylow_pair_min.str()},
              {"sylow_pairs_at_least_half", r.sylow_pairs_at_least_half},
              {"hall_pairs", halls},
              {"hall_pairs_at_least_half", r.hall_pairs_at_least_half}};
}

inline Json to_json(const LemmaSampleReport& r) {
  Json j{{"samples", r.samples}, {"violations", r.violations}};
  if (!r.failures.empty()) j["failures"] = r.failures;
  return j;
}

inline Json to_json(const IndexTableRow& r) {
  return Json{{"group", r.label},
              {"prstar", r.prstar.str()},
              {"order", r.order.str()},
              {"fitting_index", r.fitting_index.str()},
              {"fitting2_index", r.fitting2_index.str()}};
}

/// Corpus file format: a JSON array of {"label": string, "expr": string}.
inline std::vector<CorpusEntry> corpus_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("corpus file must be a JSON array");
  std::vector<CorpusEntry> out;
  for (const Json& item : j) {
    std::string label = item.at("label").get<std::string>();
    std::string expr = item.at("expr").get<std::string>();
    out.push_back(CorpusEntry{label, GroupExpr::parse(expr)});
  }
  return out;
}

}  // namespace sylprob
