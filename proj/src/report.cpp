#include "report.hpp"

#include <sstream>

namespace linfiso::report {

namespace {

using nlohmann::json;

json set_json(const IndexSet& s) {
  json out = json::array();
  for (auto i : s.one_based()) out.push_back(std::to_string(i));
  return out;
}

json vector_json(const VectorQ& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json matrix_json(const MatrixQ& a) {
  json out = json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) out.push_back(vector_json(a.row(r)));
  return out;
}

std::string vector_text(const VectorQ& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

void matrix_text(std::ostream& os, const std::string& name, const MatrixQ& a) {
  os << name << " =\n";
  for (std::size_t r = 0; r < a.rows(); ++r) os << "  " << vector_text(a.row(r)) << "\n";
}

}  // namespace

Rendered render_decision(const SubspaceSpec& spec, const DecisionReport& report) {
  Rendered out;
  std::ostringstream os;
  const char* verdict = report.verdict ? "isometric" : "not isometric";
  os << "verdict: " << verdict << "\n";
  os << "N = " << spec.ambient() << ", m = " << spec.codim() << ", n = " << spec.dim() << "\n";
  os << "method: " << to_string(report.method) << "\n";
  os << "sets examined: " << report.sets_examined << "\n";
  if (report.method == DecisionMethod::delta_m2)
    os << "inequalities tested: " << report.inequalities_tested << "\n";

  json j;
  j["command"] = "decide";
  j["verdict"] = verdict;
  j["method"] = to_string(report.method);
  j["N"] = std::to_string(spec.ambient());
  j["m"] = std::to_string(spec.codim());
  j["sets_examined"] = std::to_string(report.sets_examined);
  j["inequalities_tested"] = std::to_string(report.inequalities_tested);
  j["witness"] = nullptr;
  j["norms"] = json::object();

  if (report.witness) {
    const Witness& w = *report.witness;
    os << "witness S = " << w.set.to_string() << "\n";
    json vectors = json::object();
    for (std::size_t p = 0; p < w.set.size(); ++p) {
      const std::string k = std::to_string(w.set[p] + 1);
      os << "  h(S)^" << k << " = " << vector_text(w.family.vectors[p])
         << "   ||.||_1 = " << to_string(w.norms[p]) << "\n";
      vectors[k] = vector_json(w.family.vectors[p]);
      j["norms"][k] = to_string(w.norms[p]);
    }
    j["witness"] = {{"set", set_json(w.set)},
                    {"det_FS", to_string(w.family.det_fs)},
                    {"vectors", vectors}};
  }
  out.text = os.str();
  out.json = std::move(j);
  return out;
}

Rendered render_bounds(const BoundReport& report) {
  Rendered out;
  std::ostringstream os;
  json b;
  if (report.lower) {
    os << "lower (projection constant): " << to_string(*report.lower) << "\n";
    b["lower"] = to_string(*report.lower);
  }
  os << "upper (best distance bound): " << to_string(report.best_upper) << "\n";
  os << "best set: " << report.best_set.to_string() << "\n";
  os << "sets examined: " << report.sets_examined << "\n";
  b["upper"] = to_string(report.best_upper);
  b["best_set"] = set_json(report.best_set);
  b["sets_examined"] = std::to_string(report.sets_examined);
  if (!report.per_set.empty()) {
    json per = json::object();
    os << "per set:\n";
    for (const auto& [s, v] : report.per_set) {
      os << "  " << s.to_string() << " -> " << to_string(v) << "\n";
      per[s.to_string()] = to_string(v);
    }
    b["per_set"] = per;
  }
  out.text = os.str();
  out.json = {{"command", "bounds"}, {"bounds", b}};
  if (report.lower) out.json["lambda"] = to_string(*report.lower);
  return out;
}

Rendered render_projection(const ProjectionResult& result, bool certificate_valid,
                           bool emit_projection) {
  Rendered out;
  std::ostringstream os;
  const char* cert = certificate_valid ? "valid" : "INVALID";
  os << "lambda: " << to_string(result.lambda) << "\n";
  os << "certificate: " << cert << "\n";
  os << "simplex pivots: " << result.certificate.pivots << "\n";

  json j;
  j["command"] = "projconst";
  j["lambda"] = to_string(result.lambda);
  j["certificate"] = cert;
  j["pivots"] = std::to_string(result.certificate.pivots);
  if (emit_projection) {
    matrix_text(os, "Y", result.y);
    matrix_text(os, "P", result.p);
    j["Y"] = matrix_json(result.y);
    j["P"] = matrix_json(result.p);
    j["lp"] = {{"status", lp::to_string(result.certificate.status)},
               {"objective", to_string(result.certificate.objective)},
               {"duals", vector_json(result.certificate.duals)}};
    os << "LP objective: " << to_string(result.certificate.objective) << "\n";
    os << "LP duals: " << vector_text(result.certificate.duals) << "\n";
  }
  out.text = os.str();
  out.json = std::move(j);
  return out;
}

Rendered render_crosscheck(const CrossCheckSummary& summary) {
  Rendered out;
  std::ostringstream os;
  os << "seed: " << summary.seed << "\n";
  os << "instances: " << summary.instances << "\n";
  os << "isometric: " << summary.isometric << "\n";
  os << "agreements: " << summary.agreements << "\n";
  os << "disagreements: " << summary.disagreements.size() << "\n";

  json dis = json::array();
  for (const auto& d : summary.disagreements) {
    os << "--- instance " << d.index << "\n";
    json failures = json::array();
    for (const auto& f : d.failures) {
      os << "  failed: " << f << "\n";
      failures.push_back(f);
    }
    os << d.instance;
    dis.push_back({{"index", std::to_string(d.index)}, {"failures", failures},
                   {"instance", d.instance}});
  }
  out.text = os.str();
  out.json = {{"command", "crosscheck"},
              {"seed", std::to_string(summary.seed)},
              {"instances", std::to_string(summary.instances)},
              {"isometric", std::to_string(summary.isometric)},
              {"agreements", std::to_string(summary.agreements)},
              {"disagreements", dis}};
  return out;
}

}  // namespace linfiso::report
