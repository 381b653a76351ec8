#include "sparsecut/report_json.hpp"

namespace sparsecut {

Json to_json(VertexSet s) { return Json(s.members()); }

Json to_json(const ConnectivityResult& r) {
  Json j;
  j["kappa"] = r.kappa;
  j["complete"] = r.complete;
  j["witness_cut"] = r.witness_cut ? to_json(*r.witness_cut) : Json(nullptr);
  return j;
}

Json to_json(const CutReport& r) {
  Json j;
  j["cut"] = to_json(r.cut);
  j["is_cut"] = r.is_cut;
  j["is_minimum"] = r.is_minimum;
  j["independent"] = r.independent;
  j["foresty"] = r.foresty;
  Json parts = Json::array();
  for (const auto& p : r.parts) parts.push_back(to_json(p));
  j["parts"] = std::move(parts);
  return j;
}

Json minimum_cuts_json(int kappa, const std::vector<CutReport>& cuts) {
  Json j;
  j["kappa"] = kappa;
  Json list = Json::array();
  for (const auto& c : cuts) list.push_back(to_json(c));
  j["cuts"] = std::move(list);
  return j;
}

Json to_json(const WitnessCertificate& c) {
  Json j;
  j["cut"] = to_json(c.cut);
  j["kind"] = std::string(to_string(c.kind));
  j["trace"] = c.trace.labels();
  j["validated"] = c.validated;
  return j;
}

Json to_json(const SharpnessReport& r) {
  Json j;
  j["order"] = r.order;
  j["size"] = r.size;
  j["kappa"] = r.kappa;
  Json cuts = Json::array();
  for (const auto& c : r.minimum_cuts) cuts.push_back(to_json(c));
  j["minimum_cuts"] = std::move(cuts);
  Json claims = Json::object();
  for (const auto& [name, ok] : r.claim_verdicts) claims[name] = ok;
  j["claim_verdicts"] = std::move(claims);
  return j;
}

Json to_json(const CensusReport& r) {
  Json j;
  j["checked"] = r.checked;
  j["skipped"] = r.skipped;
  j["failures"] = r.failures;
  Json cx = Json::array();
  for (const auto& c : r.counterexamples) cx.push_back(Json{{"g6", c.g6}, {"reason", c.reason}});
  j["counterexamples"] = std::move(cx);
  Json kappa = Json::object();
  for (auto [k, v] : r.kappa_hist) kappa[std::to_string(k)] = v;
  Json traces = Json::object();
  for (const auto& [k, v] : r.trace_hist) traces[k] = v;
  Json kinds = Json::object();
  for (const auto& [k, v] : r.kind_hist) kinds[k] = v;
  j["stats"] = Json{{"kappa_hist", kappa}, {"trace_hist", traces}, {"kind_hist", kinds}};
  if (r.frontier) {
    j["frontier"] = Json{{"family", r.frontier->family},
                         {"family_canonical", r.frontier->family_canonical},
                         {"family_present", r.frontier->family_present}};
  }
  return j;
}

}  // namespace sparsecut
