#include "ffree/report_json.hpp"

namespace ffree {

Json edge_ids_json(const LabeledGraph& g) {
  Json ids = Json::array();
  for (const EdgeId id : g.edge_ids()) ids.push_back(id.index);
  return ids;
}

Json to_json(const DensityReport& report) {
  Json j;
  j["m"] = report.m.str();
  j["m2"] = report.m2 ? Json(report.m2->str()) : Json(nullptr);
  j["witness_m"] = to_pattern_string(report.witness_m);
  j["witness_m2"] = report.witness_m2 ? Json(to_pattern_string(*report.witness_m2)) : Json(nullptr);
  j["gap_holds"] = report.gap_holds;
  return j;
}

Json to_json(const LemmaConstants& c) {
  Json j;
  j["epsilon"] = c.epsilon;
  j["delta"] = c.delta;
  j["m2"] = c.m2.str();
  j["admissible_p_max"] = c.admissible_p_max;
  return j;
}

Json to_json(const TrialRecord& rec, const std::string& seed_text) {
  Json j;
  j["seed"] = seed_text;
  j["trial"] = rec.trial_index;
  j["n"] = rec.n;
  j["p"] = rec.p;
  j["in_regime"] = rec.in_regime;
  Json hits = Json::array();
  for (const HitRecord& h : rec.hits) {
    hits.push_back({{"h_index", h.h_index},
                    {"e_H", h.e_h},
                    {"shared_raw", h.shared_raw},
                    {"event_E", h.event_e},
                    {"touched_copies", h.touched_copies},
                    {"event_D", h.event_d},
                    {"shared_altered", h.shared_altered}});
  }
  j["hits"] = std::move(hits);
  j["hit_all"] = rec.hit_all;
  j["missed_weight"] = rec.missed_weight;
  j["sampled_edges"] = rec.sampled_edges;
  j["packed_copies"] = rec.packed_copies;
  j["identity_ok"] = rec.identity_ok;
  return j;
}

Json to_json(const MuEstimate& est) {
  return {{"p", est.p},
          {"mu_hat", est.mu},
          {"ci_lo", est.ci.lo},
          {"ci_hi", est.ci.hi},
          {"free_count", est.free_count},
          {"trials", est.trials}};
}

Json to_json(const ThresholdEstimate& est, const std::string& seed_text) {
  Json j;
  j["pattern"] = to_pattern_string(est.pattern);
  j["n"] = est.n;
  j["p_hat"] = est.p_hat;
  j["mu_at_p_hat"] = to_json(est.at_p_hat);
  j["bracket"] = {est.bracket.lo, est.bracket.hi};
  j["trials"] = est.trials;
  j["tolerance"] = est.tolerance;
  j["seed"] = seed_text;
  Json trace = Json::array();
  for (const auto& pt : est.trace) trace.push_back({{"p", pt.p}, {"mu_hat", pt.mu_hat}});
  j["trace"] = std::move(trace);
  return j;
}

Json to_json(const ScalingFit& fit, const std::string& seed_text) {
  Json j;
  j["pattern"] = to_pattern_string(fit.pattern);
  Json points = Json::array();
  for (const auto& est : fit.points) points.push_back(to_json(est, seed_text));
  j["points"] = std::move(points);
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["target_slope"] = fit.target_slope;
  return j;
}

Json to_json(const Certificate& cert) {
  Json members = Json::array();
  for (const auto& s : cert.members) members.push_back(edge_ids_json(s));
  return {{"pair_index", kPairIndexConvention},
          {"p", cert.p},
          {"total_weight", cert.total_weight},
          {"covers", cert.covers},
          {"members", std::move(members)}};
}

Json to_json(const FractionalCertificate& cert) {
  Json support = Json::array();
  for (const auto& [s, lambda] : cert.support) {
    support.push_back({{"edges", edge_ids_json(s)}, {"lambda", lambda}});
  }
  return {{"pair_index", kPairIndexConvention},
          {"p", cert.p},
          {"total_cost", cert.total_cost},
          {"support", std::move(support)}};
}

Json to_json(const GapReport& report) {
  return {{"pattern", to_pattern_string(report.pattern)},
          {"n", report.n},
          {"pc", report.pc},
          {"pc_method", "exact"},
          {"qf", report.qf},
          {"q", report.q},
          {"qf_degenerate", report.qf_degenerate},
          {"q_degenerate", report.q_degenerate},
          {"ratio_q_pc", report.ratio_q_pc},
          {"ratio_qf_pc", report.ratio_qf_pc},
          {"tolerance", report.tolerance},
          {"chain_holds", report.chain_holds}};
}

}  // namespace ffree
