#include "helly/report.hpp"

#include <cmath>

namespace helly {

namespace {

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json labels(const std::vector<std::string>& all, const std::vector<int>& idx) {
  Json out = Json::array();
  for (int i : idx) out.push_back(all[static_cast<std::size_t>(i)]);
  return out;
}

Json pieces(const PiecewiseSinusoid& f) {
  Json out = Json::array();
  for (const auto& p : f.pieces()) {
    out.push_back({{"start", to_json(p.start)},
                   {"end", to_json(p.end)},
                   {"a", p.coef.a},
                   {"b", p.coef.b}});
  }
  return out;
}

}  // namespace

Json report_header(const std::string& command, const std::string& statement,
                   const Json& parameters) {
  Json j;
  j["tool"] = "helly-topo";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["statement"] = statement;
  j["parameters"] = parameters;
  j["convention"] = kConventionNote;
  return j;
}

Json to_json(const BettiVector& b) {
  Json j;
  j["field"] = to_string(b.field);
  j["nonempty"] = b.nonempty;
  j["reduced_betti"] = b.betti;
  j["reduced_euler_characteristic"] = reduced_euler_characteristic(b);
  j["acyclic"] = is_acyclic(b);
  return j;
}

Json to_json(const SubcomplexFamily& family, const LedgerEntry& e) {
  Json j;
  j["subfamily"] = labels(family.labels(), e.subfamily);
  j["size"] = e.size();
  j["set"] = to_string(e.kind);
  j["degree"] = e.degree;
  j["status"] = to_string(e.status);
  if (e.observed_betti) j["observed_betti"] = *e.observed_betti;
  if (e.observed_nonempty) j["observed_nonempty"] = *e.observed_nonempty;
  return j;
}

Json to_json(const SubcomplexFamily& family, const Verdict& v) {
  Json j;
  j["theorem"] = to_string(v.theorem);
  j["members"] = family.labels();
  j["hypotheses_hold"] = v.hypotheses_hold;
  j["conclusion"] = v.conclusion;
  j["conclusion_holds"] = v.conclusion_holds ? Json(*v.conclusion_holds) : Json(nullptr);
  j["violated"] = v.violated();
  j["witness"] = to_json(v.witness);
  Json ledger;
  if (v.hypotheses.d) ledger["d"] = *v.hypotheses.d;
  if (v.hypotheses.lambda) ledger["lambda"] = *v.hypotheses.lambda;
  ledger["failures"] = v.hypotheses.failures();
  Json entries = Json::array();
  for (const auto& e : v.hypotheses.entries) entries.push_back(to_json(family, e));
  ledger["entries"] = std::move(entries);
  j["ledger"] = std::move(ledger);
  return j;
}

Json to_json(const SweepReport& r) {
  Json j;
  j["total"] = r.total;
  j["hypotheses_satisfied"] = r.hypotheses_satisfied;
  j["conclusion_held"] = r.conclusion_held;
  j["conclusion_violated"] = r.conclusion_violated;
  j["hypotheses_failed_conclusion_failed"] = r.hypotheses_failed_conclusion_failed;
  j["hypotheses_failed_conclusion_held"] = r.hypotheses_failed_conclusion_held;
  j["target_reached"] = r.target_reached;
  Json per_m = Json::object();
  for (const auto& [m, counts] : r.per_m) {
    per_m[std::to_string(m)] = {{"generated", counts.first}, {"hypotheses_satisfied", counts.second}};
  }
  j["per_m"] = std::move(per_m);
  Json hist = Json::object();
  for (const auto& [key, n] : r.failure_histogram) hist[key] = n;
  j["failure_histogram"] = std::move(hist);
  j["violating_trials"] = r.violating_trials;
  j["cross_checked"] = r.cross_checked;
  j["cross_check_mismatches"] = r.cross_check_mismatches;
  return j;
}

Json to_json(const Direction& d) {
  return {{"x", d.x}, {"y", d.y}, {"angle", d.angle()}};
}

Json to_json(const TransversalProfile& p) {
  Json j;
  j["scale"] = to_string(p.scale);
  j["units"] = "values are in scaled units; divide by scale for input coordinates";
  Json breaks = Json::array();
  for (const auto& d : p.breakpoints) breaks.push_back(to_json(d));
  j["breakpoints"] = std::move(breaks);
  j["upper"] = pieces(p.upper);
  j["lower"] = pieces(p.lower);
  return j;
}

Json to_json(const ComponentSummary& s) {
  Json j;
  j["approximate"] = s.approximate;
  j["component_count"] = s.component_count;
  j["full_circle"] = s.full_circle;
  j["nonempty"] = s.nonempty();
  j["reduced_b0"] = s.b0();
  j["reduced_b1"] = s.b1();
  Json arcs = Json::array();
  for (const auto& a : s.arcs) {
    Json arc;
    arc["start"] = to_json(a.start);
    arc["end"] = to_json(a.end);
    arc["start_angle"] = a.start_angle;
    arc["end_angle"] = a.end_angle;
    arc["width"] = a.width;
    arc["angle_error_bound"] = s.angle_error;
    arcs.push_back(std::move(arc));
  }
  j["arcs"] = std::move(arcs);
  j["min_arc_width"] = finite_or_null(s.min_arc_width);
  j["min_gap_width"] = finite_or_null(s.min_gap_width);
  Json degs = Json::array();
  for (const auto& d : s.degeneracies) {
    degs.push_back({{"kind", to_string(d.kind)}, {"start", to_json(d.start)}, {"end", to_json(d.end)}});
  }
  j["degeneracies"] = std::move(degs);
  return j;
}

Json to_json(const PolygonFamily& family, const TransversalVerdict& v) {
  Json j;
  j["statement"] = to_string(v.statement);
  j["members"] = family.labels();
  j["hypotheses_hold"] = v.hypotheses_hold;
  j["conclusion"] = v.conclusion;
  j["conclusion_holds"] = v.conclusion_holds;
  j["violated"] = v.violated();
  if (v.expected_betti) {
    j["expected_reduced_betti"] = {v.expected_betti->first, v.expected_betti->second};
  }
  Json hyps = Json::array();
  std::size_t failures = 0;
  for (const auto& c : v.hypotheses) {
    Json h;
    h["requirement"] = c.requirement;
    h["subfamily"] = labels(family.labels(), c.subfamily);
    h["passed"] = c.passed;
    if (c.requirement.rfind("component_count", 0) == 0) {
      h["component_count"] = c.component_count;
      h["full_circle"] = c.full_circle;
    }
    if (!c.passed) ++failures;
    hyps.push_back(std::move(h));
  }
  j["hypothesis_failures"] = failures;
  j["hypotheses"] = std::move(hyps);
  j["transversals"] = to_json(v.summary);
  return j;
}

Json to_json(const PlaneSweepReport& r) {
  Json j;
  j["total"] = r.total;
  j["generation_failures"] = r.generation_failures;
  j["hypotheses_satisfied"] = r.hypotheses_satisfied;
  j["conclusion_held"] = r.conclusion_held;
  j["conclusion_violated"] = r.conclusion_violated;
  j["hypotheses_failed_conclusion_failed"] = r.hypotheses_failed_conclusion_failed;
  j["hypotheses_failed_conclusion_held"] = r.hypotheses_failed_conclusion_held;
  j["target_reached"] = r.target_reached;
  j["full_circle"] = r.full_circle;
  j["degenerate"] = r.degenerate;
  Json hist = Json::object();
  for (const auto& [count, n] : r.component_histogram) hist[std::to_string(count)] = n;
  j["component_histogram"] = std::move(hist);
  j["violating_trials"] = r.violating_trials;
  if (r.config.kind == PlaneSweepKind::OracleAgreement) {
    j["oracle"] = {{"resolution", r.config.resolution},
                   {"guarded", r.guarded},
                   {"guarded_disagreements", r.guarded_disagreements},
                   {"guarded_disagreements_flagged", r.guarded_disagreements_flagged},
                   {"unguarded", r.unguarded},
                   {"unguarded_disagreements", r.unguarded_disagreements}};
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace helly
