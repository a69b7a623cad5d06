#include "mvsat/report.hpp"

#include <sstream>

namespace mvsat {

using nlohmann::json;

std::string_view to_string(NegationMode m) {
  return m == NegationMode::faithful ? "faithful" : "affine";
}
std::string_view to_string(BoundMode m) { return m == BoundMode::k ? "k" : "k-1"; }
std::string_view to_string(RoundingBase r) { return r == RoundingBase::two ? "2" : "k"; }
std::string_view to_string(Objective o) { return o == Objective::none ? "none" : "max-sum"; }
std::string_view to_string(ArithmeticMode a) {
  return a == ArithmeticMode::rational ? "rational" : "float";
}
std::string_view to_string(LpStatus s) {
  switch (s) {
    case LpStatus::feasible: return "feasible";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "unknown";
}
std::string_view to_string(Claim c) { return c == Claim::sat_claim ? "sat_claim" : "unsat_claim"; }
std::string_view to_string(SatStatus s) { return s == SatStatus::sat ? "sat" : "unsat"; }
std::string_view to_string(OracleOutcome o) {
  switch (o) {
    case OracleOutcome::sat: return "sat";
    case OracleOutcome::unsat: return "unsat";
    case OracleOutcome::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

namespace {

json rationals(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& q : v) arr.push_back(format_rational(q));
  return arr;
}

json fit_json(const std::optional<PowerFit>& f) {
  if (!f) return nullptr;
  return {{"exponent", f->exponent}, {"coefficient", f->coefficient}, {"points", f->points}};
}

template <class T>
json optional_string(const std::optional<T>& v) {
  if (!v) return nullptr;
  return std::string(to_string(*v));
}

double rate(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(whole);
}

}  // namespace

json to_json(const OpCount& ops) {
  return {{"additions", ops.additions}, {"mu_calls", ops.mu_calls}, {"negations", ops.negations}};
}

json to_json(const LpSystem& s) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.constraints.size(); ++i) {
    const auto& c = s.constraints[i];
    json coeffs = json::object();
    for (const auto& [j, q] : c.coefficients) coeffs["X" + std::to_string(j + 1)] = format_rational(q);
    rows.push_back({{"kind", i < s.clause_rows ? "clause" : "box"},
                    {"coefficients", coeffs},
                    {"sense", "<="},
                    {"bound", format_rational(c.bound)},
                    {"offset", format_rational(c.offset)}});
  }
  json out = {{"num_vars", s.num_vars}, {"constraints", rows}, {"nonnegative", true}};
  out["objective"] = s.objective ? rationals(*s.objective) : json(nullptr);
  return out;
}

json to_json(const LpSolution& s) {
  json out = {{"status", to_string(s.status)}, {"pivot_steps", s.pivot_steps}};
  out["point"] = s.point ? rationals(*s.point) : json(nullptr);
  out["objective_value"] = s.objective_value ? json(format_rational(*s.objective_value)) : json(nullptr);
  out["infeasibility"] = s.infeasibility ? json(format_rational(*s.infeasibility)) : json(nullptr);
  return out;
}

json to_json(const PipelineConfig& c) {
  return {{"negation", to_string(c.negation)},     {"bound", to_string(c.bound)},
          {"round_base", to_string(c.rounding)},   {"objective", to_string(c.objective)},
          {"arithmetic", to_string(c.arithmetic)}};
}

json to_json(const PipelineResult& r) {
  json anomalies = json::array();
  for (const auto& a : r.anomalies) {
    anomalies.push_back({{"var", a.var}, {"raw", format_rational(a.raw)}, {"rounded", a.rounded}});
  }
  json out = {{"claimed_status", to_string(r.claimed_status)},
              {"lp", to_json(r.lp)},
              {"anomalies", anomalies},
              {"rounding_base", r.rounding_base},
              {"steps",
               {{"construction", r.steps.construction},
                {"pivots", r.steps.pivots},
                {"rounding", r.steps.rounding},
                {"total", r.steps.total()}}}};
  out["rounded"] = r.rounded ? json(format_assignment(*r.rounded)) : json(nullptr);
  out["verified"] = r.verified ? json(*r.verified) : json(nullptr);
  return out;
}

json to_json(const OracleVerdict& v) {
  json out = {{"status", to_string(v.status)}, {"nodes_explored", v.nodes_explored}};
  out["witness"] = v.witness ? json(format_assignment(*v.witness)) : json(nullptr);
  return out;
}

json to_json(const DiffRecord& r, bool canonical) {
  json out = {{"id", r.id},
              {"num_vars", r.num_vars},
              {"num_clauses", r.num_clauses},
              {"category", to_string(r.category)},
              {"anomalies", r.anomalies},
              {"pipeline_steps", r.pipeline_steps},
              {"pipeline_pivots", r.pipeline_pivots},
              {"oracle_nodes", r.oracle_nodes}};
  out["claim"] = optional_string(r.claim);
  out["oracle"] = optional_string(r.oracle);
  out["candidate_verified"] = r.candidate_verified ? json(*r.candidate_verified) : json(nullptr);
  out["beta_additions"] = r.beta_additions ? json(*r.beta_additions) : json(nullptr);
  out["error"] = r.error.empty() ? json(nullptr) : json(r.error);
  if (!canonical) {
    out["pipeline_ms"] = r.pipeline_ms;
    out["oracle_ms"] = r.oracle_ms;
  }
  return out;
}

json to_json(const DiffReport& r, bool canonical) {
  json config = to_json(r.config.pipeline);
  config["oracle"] = r.config.oracle == OracleMethod::dpll ? "dpll" : "brute";
  config["node_budget"] = r.config.node_budget;
  if (!canonical) config["threads"] = r.config.threads;

  const auto& a = r.aggregates;
  json counts = json::object(), rates = json::object();
  for (auto c : kAllCategories) {
    const auto n = a.counts.count(c) ? a.counts.at(c) : 0;
    counts[std::string(to_string(c))] = n;
    rates[std::string(to_string(c))] = rate(n, a.total);
  }
  json records = json::array();
  for (const auto& rec : r.records) records.push_back(to_json(rec, canonical));

  json out = {{"config", config},
              {"records", records},
              {"aggregates",
               {{"total", a.total},
                {"counts", counts},
                {"rates", rates},
                {"decided", a.decided},
                {"status_agreements", a.status_agreements},
                {"status_agreement_rate", rate(a.status_agreements, a.decided)}}},
              {"scaling",
               {{"beta_additions_vs_clauses", fit_json(r.additions_vs_m)},
                {"pipeline_steps_vs_vars", fit_json(r.steps_vs_n)}}}};
  if (r.beta_divergence) {
    out["beta_divergence"] = {{"instance", r.beta_divergence->instance_id},
                              {"assignment", format_assignment(r.beta_divergence->assignment)}};
  } else {
    out["beta_divergence"] = nullptr;
  }
  return out;
}

json to_json(const BenchReport& r, bool canonical) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json j = {{"m", row.m}, {"measured", to_json(row.measured)}, {"predicted", to_json(row.predicted)}};
    if (!canonical) j["wall_ns"] = row.wall_ns;
    rows.push_back(j);
  }
  json out = {{"k", r.k},
              {"seed", r.seed},
              {"sizes", r.sizes},
              {"rows", rows},
              {"counts_match_model", r.counts_match_model},
              {"additions_fit", fit_json(r.additions_fit)}};
  if (!canonical) out["time_fit"] = fit_json(r.time_fit);
  return out;
}

std::string to_csv(const DiffReport& r, bool canonical) {
  std::ostringstream os;
  os << "id,num_vars,num_clauses,claim,candidate_verified,oracle,category,anomalies,"
        "pipeline_steps,pipeline_pivots,oracle_nodes";
  if (!canonical) os << ",pipeline_ms,oracle_ms";
  os << '\n';
  for (const auto& rec : r.records) {
    os << rec.id << ',' << rec.num_vars << ',' << rec.num_clauses << ','
       << (rec.claim ? to_string(*rec.claim) : "") << ','
       << (rec.candidate_verified ? (*rec.candidate_verified ? "true" : "false") : "") << ','
       << (rec.oracle ? to_string(*rec.oracle) : "") << ',' << to_string(rec.category) << ','
       << rec.anomalies << ',' << rec.pipeline_steps << ',' << rec.pipeline_pivots << ','
       << rec.oracle_nodes;
    if (!canonical) os << ',' << rec.pipeline_ms << ',' << rec.oracle_ms;
    os << '\n';
  }
  return os.str();
}

std::string to_csv(const BenchReport& r) {
  std::ostringstream os;
  os << "k,m,additions,mu_calls,negations,predicted_additions,wall_ns\n";
  for (const auto& row : r.rows) {
    os << r.k << ',' << row.m << ',' << row.measured.additions << ',' << row.measured.mu_calls
       << ',' << row.measured.negations << ',' << row.predicted.additions << ',' << row.wall_ns
       << '\n';
  }
  return os.str();
}

}  // namespace mvsat
