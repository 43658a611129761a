#include "kov/report.hpp"

namespace kov {

json report_json(const Rational& r) { return to_string(r); }

json report_json(const QMatrix& m) { return m.to_strings(); }

json report_json(const MatPoly& m) { return m.to_strings(); }

json report_json(const ResiduePair& r) {
  json j{{"p", report_json(r.p)}, {"q", report_json(r.q)}, {"shape", r.shape.to_string()}};
  if (r.type_tag) j["type"] = *r.type_tag;
  return j;
}

json report_json(const std::vector<SpectrumEntry>& spectrum) {
  json out = json::array();
  for (const auto& e : spectrum) out.push_back({{"lambda", report_json(e.lambda)}, {"dim", e.dim}});
  return out;
}

json report_json(const MaximalityVerdict& v) {
  return {{"params_in_coefficients", v.param_count_in_coeffs},
          {"orbit_dim", v.orbit_dim},
          {"total", v.total},
          {"target", v.target},
          {"obstruction_free", v.obstruction_free},
          {"maximal", v.maximal}};
}

json report_json(const Obstruction& o) {
  json rows = json::object();
  for (const auto& [label, p] : o.rows) rows[label] = p.to_string();
  return {{"k", o.k}, {"rows", rows}};
}

json report_json(const std::vector<Obstruction>& obs) {
  json out = json::array();
  for (const auto& o : obs) out.push_back(report_json(o));
  return out;
}

json report_json(const SeriesSolution& s) {
  json coeffs = json::array();
  for (std::size_t k = 0; k < s.x.size(); ++k)
    coeffs.push_back({{"k", static_cast<int>(k)}, {"x", report_json(s.x[k])}, {"y", report_json(s.y[k])}});
  json params = json::array();
  for (const auto& f : s.free_params) params.push_back(f.name());
  return {{"n", s.n},
          {"alpha", report_json(s.alpha)},
          {"beta", report_json(s.beta)},
          {"residues", report_json(s.residues)},
          {"depth", s.depth},
          {"coefficients", coeffs},
          {"free_params", params},
          {"resonances", s.resonance_orders},
          {"obstructions", report_json(s.obstructions)},
          {"verdict", report_json(maximality(s))}};
}

json report_json(const CandidateReport& c) {
  json j{{"name", c.name},
         {"residues", report_json(c.residues)},
         {"expanded", c.expanded},
         {"verdict", report_json(c.verdict)}};
  if (c.expanded) {
    j["obstructions"] = report_json(c.obstructions);
    j["residual_ok"] = c.residual_ok;
  }
  return j;
}

json report_json(const ClassificationResult& c) {
  json cands = json::array();
  for (const auto& r : c.candidates) cands.push_back(report_json(r));
  return {{"point", {report_json(c.point.first), report_json(c.point.second)}},
          {"maximal_types", c.maximal_types},
          {"noncommuting_maximal", c.noncommuting_maximal},
          {"total_maximal", c.total_maximal},
          {"candidates", cands}};
}

json report_json(const DeformationReport& d) {
  json cands = json::array();
  for (const auto& r : d.candidates) cands.push_back(report_json(r));
  return {{"family", d.family}, {"all_maximal", d.all_maximal}, {"candidates", cands}};
}

json report_json(const JetReport& j) {
  return {{"trials", j.trials}, {"passed", j.passed}, {"resampled", j.resampled}, {"ok", j.ok()}};
}

json report_json(const ReductionReport& r) {
  return {{"kappa", report_json(r.coeffs.kappa)},
          {"k1", report_json(r.coeffs.k1)},
          {"k2", report_json(r.coeffs.k2)},
          {"k3", report_json(r.coeffs.k3)},
          {"k4", report_json(r.coeffs.k4)},
          {"k5", report_json(r.coeffs.k5)},
          {"jets", report_json(r.jets)}};
}

json report_json(const DegenerationResult& d) {
  json j{{"source", d.name},
         {"target", p2_name(d.target)},
         {"kappa", report_json(d.kappa)},
         {"f_limit", report_json(d.f_limit)},
         {"g_limit", report_json(d.g_limit)},
         {"match", d.match}};
  if (d.constraint_maps) j["constraint_maps"] = *d.constraint_maps;
  return j;
}

json make_report(const std::string& command, json config, json result) {
  return {{"schema", kReportSchema}, {"command", command}, {"config", std::move(config)}, {"result", std::move(result)}};
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace kov
